#include "gproj/enumerate.hpp"

#include <map>

#include "gproj/errors.hpp"

namespace gproj {

namespace {

std::string rank_profile(const Module& m) {
  std::string key;
  for (std::size_t p = 0; p < m.alg().dim(); ++p) key += std::to_string(rank(m.path_action(p))) + ",";
  return key;
}

FieldScalar draw(Field f, std::mt19937_64& rng) {
  if (f.is_prime()) return FieldScalar::residue(f, static_cast<std::uint32_t>(rng() % f.characteristic()));
  return FieldScalar(f, static_cast<long long>(rng() % 5) - 2);
}

}  // namespace

std::vector<Module> enumerate_modules(const AlgebraPtr& a, const std::vector<std::size_t>& dims,
                                      std::size_t max_bits) {
  if (a->field() != Field::prime(2)) throw InvalidInput("enumerate_modules runs over F_2 only");
  if (dims.size() != a->num_vertices()) throw DimensionMismatch("dimension vector has the wrong length");
  std::size_t total = 0;
  for (auto d : dims) total += d;
  if (total > 8) throw BudgetExceeded("enumerate_modules is limited to total dimension 8");
  const Quiver& q = a->quiver();
  std::size_t bits = 0;
  for (const auto& arr : q.arrows()) bits += dims[arr.target] * dims[arr.source];
  if (bits > max_bits) {
    throw BudgetExceeded("enumerate_modules would visit 2^" + std::to_string(bits) + " assignments");
  }
  std::map<std::string, std::vector<Module>> buckets;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    std::vector<Mat> maps;
    std::size_t bit = 0;
    for (const auto& arr : q.arrows()) {
      Mat m(a->field(), dims[arr.target], dims[arr.source]);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if ((code >> bit++) & 1) m.set(i, j, 1);
        }
      }
      maps.push_back(std::move(m));
    }
    Module cand(a, dims, std::move(maps));
    if (!validate(cand).ok) continue;
    auto& reps = buckets[rank_profile(cand)];
    bool seen = false;
    for (const auto& r : reps) {
      if (is_isomorphic(r, cand)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(std::move(cand));
  }
  std::vector<Module> out;
  for (auto& [key, reps] : buckets) {
    for (auto& r : reps) out.push_back(std::move(r));
  }
  return out;
}

Module random_module(const AlgebraPtr& a, const std::vector<std::size_t>& dims, std::mt19937_64& rng) {
  const Quiver& q = a->quiver();
  std::vector<Mat> maps;
  for (const auto& arr : q.arrows()) {
    Mat m(a->field(), dims.at(arr.target), dims.at(arr.source));
    const std::uint64_t density = 1 + rng() % 4;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (rng() % 4 < density) m.set(i, j, draw(a->field(), rng));
      }
    }
    maps.push_back(std::move(m));
  }
  while (true) {
    Module cand(a, dims, maps);
    std::optional<std::size_t> bad;
    for (std::size_t r = 0; r < a->relations().size() && !bad; ++r) {
      const auto& rel = a->relations()[r];
      if (!cand.path_action(rel, q.arrow(rel.front()).source).is_zero()) bad = r;
    }
    if (!bad) return cand;
    std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> nonzero;
    for (auto x : a->relations()[*bad]) {
      for (std::size_t i = 0; i < maps[x].rows(); ++i) {
        for (std::size_t j = 0; j < maps[x].cols(); ++j) {
          if (!maps[x].is_zero_at(i, j)) nonzero.push_back({x, {i, j}});
        }
      }
    }
    const auto& pick = nonzero[rng() % nonzero.size()];
    maps[pick.first].set(pick.second.first, pick.second.second, 0);
  }
}

std::vector<std::size_t> random_dim_vector(const AlgebraPtr& a, std::size_t max_total, std::mt19937_64& rng) {
  const std::size_t n = a->num_vertices();
  std::vector<std::size_t> dims(n, 0);
  const std::size_t total = 1 + rng() % max_total;
  for (std::size_t i = 0; i < total; ++i) ++dims[rng() % n];
  return dims;
}

Mat random_invertible(Field f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, draw(f, rng));
    }
    if (is_invertible(m)) return m;
  }
}

Module random_twist(const Module& m, std::mt19937_64& rng) {
  std::vector<Mat> g, ginv;
  for (auto d : m.dims()) {
    g.push_back(random_invertible(m.field(), d, rng));
    ginv.push_back(*inverse(g.back()));
  }
  std::vector<Mat> maps;
  for (std::size_t x = 0; x < m.alg().num_arrows(); ++x) {
    const auto& arr = m.alg().quiver().arrow(x);
    maps.push_back(g[arr.target] * m.map(x) * ginv[arr.source]);
  }
  return Module(m.algebra(), m.dims(), std::move(maps));
}

}  // namespace gproj
