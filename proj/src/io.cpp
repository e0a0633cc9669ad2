#include "gproj/io.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "gproj/errors.hpp"

namespace gproj {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : InvalidInput("line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : "") + ": " +
                   message),
      line_(line),
      column_(column) {}

namespace {

struct Line {
  std::size_t no;
  std::string raw;
  std::string text;  // comment stripped and trimmed
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string t = raw.substr(0, raw.find('#'));
    t = trim(t);
    if (!t.empty()) out.push_back({no, raw, t});
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::size_t column_of(const Line& l, const std::string& token) {
  auto p = l.raw.find(token);
  return p == std::string::npos ? 0 : p + 1;
}

/// "key: rest" for one of the given keys.
std::optional<std::pair<std::string, std::string>> key_line(const std::string& text,
                                                            std::initializer_list<const char*> keys) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string key = trim(text.substr(0, colon));
  for (const char* k : keys) {
    if (key == k) return std::make_pair(key, trim(text.substr(colon + 1)));
  }
  return std::nullopt;
}

Field parse_field(const Line& l, const std::string& value) {
  try {
    return Field::parse(value);
  } catch (const Error& e) {
    throw ParseError("bad field '" + value + "'", l.no, column_of(l, value));
  }
}

struct ArrowSpec {
  std::string name, from, to;
  Line line;
};

const std::regex& arrow_pattern() {
  static const std::regex re(R"(^([^:\s]+)\s*:\s*([^\s]+)\s*->\s*([^\s]+)$)");
  return re;
}

ArrowSpec parse_arrow(const Line& l) {
  std::smatch m;
  if (!std::regex_match(l.text, m, arrow_pattern())) {
    throw ParseError("expected 'name: source -> target'", l.no, column_of(l, l.text));
  }
  return {m[1], m[2], m[3], l};
}

struct AlgebraBlock {
  std::optional<Field> field;
  std::vector<std::pair<std::string, Line>> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<Line> relations;
  std::size_t first_line = 1;
};

AlgebraBlock parse_block(const std::vector<Line>& lines, std::size_t first_line) {
  AlgebraBlock b;
  b.first_line = first_line;
  enum { None, Vertices, Arrows, Relations } section = None;
  for (const auto& l : lines) {
    const bool arrow_like = section == Arrows && l.text.find("->") != std::string::npos;
    auto kv = arrow_like ? std::nullopt : key_line(l.text, {"field", "vertices", "arrows", "relations"});
    if (kv) {
      const auto& [key, value] = *kv;
      if (key == "field") {
        b.field = parse_field(l, value);
        section = None;
      } else if (key == "vertices") {
        for (const auto& v : tokens(value)) b.vertices.emplace_back(v, l);
        section = Vertices;
      } else {
        if (!value.empty()) throw ParseError("'" + key + ":' takes its entries on the following lines", l.no);
        section = key == "arrows" ? Arrows : Relations;
      }
      continue;
    }
    switch (section) {
      case Vertices:
        for (const auto& v : tokens(l.text)) b.vertices.emplace_back(v, l);
        break;
      case Arrows:
        b.arrows.push_back(parse_arrow(l));
        break;
      case Relations:
        b.relations.push_back(l);
        break;
      case None:
        throw ParseError("unexpected line '" + l.text + "'", l.no, column_of(l, l.text));
    }
  }
  return b;
}

Quiver build_quiver(const AlgebraBlock& b, const std::string& what) {
  if (b.vertices.empty()) throw ParseError(what + ": no vertices", b.first_line);
  Quiver q;
  for (const auto& [v, l] : b.vertices) {
    if (q.find_vertex(v)) throw ParseError("duplicate vertex '" + v + "'", l.no, column_of(l, v));
    q.add_vertex(v);
  }
  for (const auto& a : b.arrows) {
    if (q.find_arrow(a.name)) throw ParseError("duplicate arrow '" + a.name + "'", a.line.no, column_of(a.line, a.name));
    auto s = q.find_vertex(a.from);
    if (!s) throw ParseError("unknown vertex '" + a.from + "'", a.line.no, column_of(a.line, a.from));
    auto t = q.find_vertex(a.to);
    if (!t) {
      throw ParseError("unknown vertex '" + a.to + "'", a.line.no, a.line.raw.rfind(a.to) + 1);
    }
    q.add_arrow(a.name, *s, *t);
  }
  return q;
}

std::vector<std::vector<std::size_t>> build_relations(const Quiver& q, const std::vector<Line>& lines) {
  std::vector<std::vector<std::size_t>> rels;
  for (const auto& l : lines) {
    for (const auto& tok : tokens(l.text)) {
      if (!q.find_arrow(tok)) throw ParseError("unknown arrow '" + tok + "'", l.no, column_of(l, tok));
    }
    rels.push_back(parse_relation(q, l.text));
  }
  return rels;
}

AlgebraPtr build_algebra(const AlgebraBlock& b, Field f, const std::string& what) {
  Quiver q = build_quiver(b, what);
  auto rels = build_relations(q, b.relations);
  try {
    return Algebra::build(std::move(q), std::move(rels), f);
  } catch (const InfiniteDimensional&) {
    throw;
  } catch (const InvalidInput& e) {
    const std::size_t line = b.relations.empty() ? b.first_line : b.relations.front().no;
    throw ParseError(what + ": " + e.what(), line);
  }
}

Field resolve_field(std::optional<Field> override_field, std::optional<Field> file_field) {
  if (override_field) return *override_field;
  return file_field.value_or(Field::prime(2));
}

}  // namespace

AlgebraPtr parse_algebra(const std::string& text, std::optional<Field> field) {
  auto lines = split_lines(text);
  AlgebraBlock b = parse_block(lines, lines.empty() ? 1 : lines.front().no);
  return build_algebra(b, resolve_field(field, b.field), "algebra");
}

TriangularPtr parse_triangular(const std::string& text, std::optional<Field> field) {
  auto lines = split_lines(text);
  std::optional<Field> file_field;
  std::map<std::string, std::vector<Line>> blocks;
  std::map<std::string, std::size_t> block_line;
  std::string current;
  for (const auto& l : lines) {
    if (l.text.front() == '[') {
      if (l.text.back() != ']') throw ParseError("unterminated block header", l.no, column_of(l, l.text));
      current = trim(l.text.substr(1, l.text.size() - 2));
      if (current != "lambda" && current != "gamma" && current != "connecting" && current != "relations") {
        throw ParseError("unknown block '" + current + "'", l.no, column_of(l, current));
      }
      if (block_line.count(current)) throw ParseError("repeated block '" + current + "'", l.no);
      block_line[current] = l.no;
      blocks[current];
      continue;
    }
    if (current.empty()) {
      auto kv = key_line(l.text, {"field"});
      if (!kv) throw ParseError("expected 'field:' or a block header", l.no, column_of(l, l.text));
      file_field = parse_field(l, kv->second);
      continue;
    }
    blocks[current].push_back(l);
  }
  for (const char* need : {"lambda", "gamma"}) {
    if (!blocks.count(need)) throw ParseError(std::string("missing block [") + need + "]", lines.empty() ? 1 : lines.back().no);
  }
  AlgebraBlock lb = parse_block(blocks["lambda"], block_line["lambda"]);
  AlgebraBlock gb = parse_block(blocks["gamma"], block_line["gamma"]);
  for (const auto* b : {&lb, &gb}) {
    if (b->field && file_field && *b->field != *file_field) {
      throw ParseError("block field disagrees with the file field", b->first_line);
    }
    if (b->field && !file_field) file_field = b->field;
  }
  if (lb.field && gb.field && *lb.field != *gb.field) throw ParseError("lambda and gamma fields differ", gb.first_line);
  const Field f = resolve_field(field, file_field);
  AlgebraPtr lambda = build_algebra(lb, f, "lambda");
  AlgebraPtr gamma = build_algebra(gb, f, "gamma");

  std::vector<ConnectingArrow> connecting;
  for (const auto& l : blocks["connecting"]) {
    ArrowSpec a = parse_arrow(l);
    if (!gamma->quiver().find_vertex(a.from)) {
      throw ParseError("connecting arrow '" + a.name + "' must start at a gamma vertex", l.no, column_of(l, a.from));
    }
    if (!lambda->quiver().find_vertex(a.to)) {
      throw ParseError("connecting arrow '" + a.name + "' must end at a lambda vertex", l.no, l.raw.rfind(a.to) + 1);
    }
    connecting.push_back({a.name, a.from, a.to});
  }
  std::vector<std::string> mixed;
  for (const auto& l : blocks["relations"]) mixed.push_back(l.text);
  try {
    return TriangularAlgebra::from_parts(lambda, gamma, connecting, mixed);
  } catch (const InfiniteDimensional&) {
    throw;
  } catch (const InvalidInput& e) {
    std::size_t line = block_line.count("connecting") ? block_line["connecting"] : block_line["gamma"];
    if (block_line.count("relations")) line = block_line["relations"];
    throw ParseError(e.what(), line);
  }
}

Module parse_module(const std::string& text, const AlgebraPtr& a) {
  auto lines = split_lines(text);
  const Quiver& q = a->quiver();
  if (lines.empty()) throw ParseError("empty module file", 1);
  auto dims_kv = key_line(lines.front().text, {"dims"});
  if (!dims_kv) throw ParseError("expected 'dims:'", lines.front().no, 1);
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  std::set<std::size_t> seen;
  for (const auto& tok : tokens(dims_kv->second)) {
    const Line& l = lines.front();
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'vertex:dimension'", l.no, column_of(l, tok));
    auto v = q.find_vertex(tok.substr(0, colon));
    if (!v) throw ParseError("unknown vertex '" + tok.substr(0, colon) + "'", l.no, column_of(l, tok));
    if (!seen.insert(*v).second) throw ParseError("vertex listed twice", l.no, column_of(l, tok));
    try {
      std::size_t used = 0;
      const std::string num = tok.substr(colon + 1);
      const unsigned long d = std::stoul(num, &used);
      if (used != num.size() || num.front() == '-') throw std::invalid_argument("dim");
      dims[*v] = d;
    } catch (const std::exception&) {
      throw ParseError("bad dimension in '" + tok + "'", l.no, column_of(l, tok));
    }
  }

  std::vector<Mat> maps;
  for (std::size_t x = 0; x < q.num_arrows(); ++x) {
    maps.emplace_back(a->field(), dims[q.arrow(x).target], dims[q.arrow(x).source]);
  }
  std::vector<bool> given(q.num_arrows(), false);
  std::optional<std::size_t> arrow;
  std::size_t row = 0;
  std::size_t header_line = 0;
  auto finish = [&](std::size_t line) {
    if (arrow && row != maps[*arrow].rows()) {
      throw ParseError("arrow '" + q.arrow(*arrow).name + "' needs " + std::to_string(maps[*arrow].rows()) +
                           " rows, got " + std::to_string(row),
                       line ? line : header_line);
    }
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.text.back() == ':') {
      finish(l.no);
      const std::string name = trim(l.text.substr(0, l.text.size() - 1));
      arrow = q.find_arrow(name);
      if (!arrow) throw ParseError("unknown arrow '" + name + "'", l.no, column_of(l, name));
      if (given[*arrow]) throw ParseError("arrow '" + name + "' given twice", l.no);
      given[*arrow] = true;
      row = 0;
      header_line = l.no;
      continue;
    }
    if (!arrow) throw ParseError("matrix row before an arrow header", l.no, column_of(l, l.text));
    Mat& m = maps[*arrow];
    auto entries = tokens(l.text);
    if (row >= m.rows()) throw ParseError("too many rows for arrow '" + q.arrow(*arrow).name + "'", l.no);
    if (entries.size() != m.cols()) {
      throw ParseError("expected " + std::to_string(m.cols()) + " entries, got " + std::to_string(entries.size()),
                       l.no, column_of(l, l.text));
    }
    for (std::size_t c = 0; c < entries.size(); ++c) {
      try {
        mpq_class value(entries[c]);
        value.canonicalize();
        m.set(row, c, FieldScalar(a->field(), value));
      } catch (const std::exception&) {
        throw ParseError("bad entry '" + entries[c] + "'", l.no, column_of(l, entries[c]));
      }
    }
    ++row;
  }
  finish(lines.back().no);
  Module out(a, std::move(dims), std::move(maps));
  ValidationReport r = validate(out);
  if (!r.ok) throw ParseError("not a module: " + r.message, lines.front().no);
  return out;
}

std::string format_module(const Module& m) {
  const Quiver& q = m.alg().quiver();
  std::ostringstream os;
  os << "dims:";
  for (std::size_t v = 0; v < q.num_vertices(); ++v) os << " " << q.vertex_name(v) << ":" << m.dim(v);
  os << "\n";
  for (std::size_t x = 0; x < q.num_arrows(); ++x) {
    const Mat& a = m.map(x);
    if (a.rows() == 0 || a.cols() == 0) continue;
    os << q.arrow(x).name << ":\n";
    for (std::size_t r = 0; r < a.rows(); ++r) {
      os << " ";
      for (std::size_t c = 0; c < a.cols(); ++c) os << " " << a.at(r, c).to_string();
      os << "\n";
    }
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlgebraPtr load_algebra(const std::string& path, std::optional<Field> field) {
  return parse_algebra(read_file(path), field);
}

TriangularPtr load_triangular(const std::string& path, std::optional<Field> field) {
  return parse_triangular(read_file(path), field);
}

Module load_module(const std::string& path, const AlgebraPtr& a) { return parse_module(read_file(path), a); }

}  // namespace gproj
