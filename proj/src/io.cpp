#include "hvn/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hvn/config.hpp"
#include "hvn/errors.hpp"

namespace hvn {

namespace {

struct Line {
  int number;  // 1-based position in the file
  std::vector<std::string> tokens;
};

// Non-empty, non-comment lines with their original numbers.
std::vector<Line> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, path.string() + ": cannot open file");
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream is(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (is >> tok) {
      if (tok[0] == '#') break;
      line.tokens.push_back(tok);
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void parse_fail(const std::filesystem::path& path, int line, const std::string& msg) {
  fail(ErrorKind::Parse, path.string() + ":" + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::filesystem::path& path, const Line& line, const std::string& tok) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    parse_fail(path, line.number, "expected an integer, got '" + tok + "'");
  }
}

std::vector<int> parse_image_row(const std::filesystem::path& path, const Line& line, int width,
                                 int bound, const char* what) {
  if (static_cast<int>(line.tokens.size()) != width) {
    parse_fail(path, line.number,
               std::string("expected ") + std::to_string(width) + " entries for " + what + ", got " +
                   std::to_string(line.tokens.size()));
  }
  std::vector<int> row(width);
  for (int j = 0; j < width; ++j) {
    long long v = parse_int(path, line, line.tokens[j]);
    if (v < 0 || v >= bound) {
      parse_fail(path, line.number, "entry " + std::to_string(v) + " out of range [0," +
                                        std::to_string(bound) + ")");
    }
    row[j] = static_cast<int>(v);
  }
  return row;
}

LoadedGroup cayley_from_lines(const std::filesystem::path& path, const std::vector<Line>& lines) {
  long long n = parse_int(path, lines[0], lines[0].tokens[0]);
  if (n <= 0 || n > static_cast<long long>(kTableOrderCap)) {
    parse_fail(path, lines[0].number, "group order " + std::to_string(n) + " out of range");
  }
  if (static_cast<long long>(lines.size()) != n + 1) {
    parse_fail(path, lines[0].number,
               "expected " + std::to_string(n) + " table rows, found " + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<int>> table;
  for (long long i = 1; i <= n; ++i) {
    table.push_back(parse_image_row(path, lines[i], static_cast<int>(n), static_cast<int>(n), "a table row"));
  }
  LoadedGroup lg;
  lg.group = group_from_cayley_table(table, {});
  lg.id = path.string();
  return lg;
}

LoadedGroup perm_from_lines(const std::filesystem::path& path, const std::vector<Line>& lines) {
  long long degree = parse_int(path, lines[0], lines[0].tokens[0]);
  if (degree <= 0 || degree > 4096) {
    parse_fail(path, lines[0].number, "degree " + std::to_string(degree) + " out of range");
  }
  if (lines.size() < 2) parse_fail(path, lines[0].number, "no generator lines");
  std::vector<Perm> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Perm g = parse_image_row(path, lines[i], static_cast<int>(degree), static_cast<int>(degree),
                             "a generator");
    if (!is_perm(g)) {
      parse_fail(path, lines[i].number, "generator is not a permutation");
    }
    gens.push_back(std::move(g));
  }
  LoadedGroup lg;
  lg.realization = group_from_permutations(gens, kTableOrderCap);
  lg.group = lg.realization->group;
  lg.id = path.string();
  return lg;
}

int parse_inline_arg(const std::string& id, const std::string& prefix) {
  std::string rest = id.substr(prefix.size());
  try {
    std::size_t used = 0;
    int v = std::stoi(rest, &used);
    if (used != rest.size() || v <= 0) throw std::invalid_argument(rest);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad group id '" + id + "': expected " + prefix + "<positive integer>");
  }
}

}  // namespace

bool is_inline_group_id(const std::string& s) {
  if (s == "gl32") return true;
  for (const char* p : {"cyclic:", "symmetric:", "dihedral:", "quaternion:", "product:"}) {
    if (s.rfind(p, 0) == 0) return true;
  }
  return false;
}

LoadedGroup group_from_inline(const std::string& id) {
  LoadedGroup lg;
  lg.id = id;
  if (id == "gl32") {
    lg.realization = group_gl32();
    lg.group = lg.realization->group;
    return lg;
  }
  if (id.rfind("cyclic:", 0) == 0) {
    lg.group = group_cyclic(parse_inline_arg(id, "cyclic:"));
    return lg;
  }
  if (id.rfind("symmetric:", 0) == 0) {
    lg.realization = group_symmetric(parse_inline_arg(id, "symmetric:"));
    lg.group = lg.realization->group;
    return lg;
  }
  if (id.rfind("dihedral:", 0) == 0) {
    lg.group = group_dihedral(parse_inline_arg(id, "dihedral:"));
    return lg;
  }
  if (id.rfind("quaternion:", 0) == 0) {
    lg.group = group_dicyclic(parse_inline_arg(id, "quaternion:"));
    return lg;
  }
  if (id.rfind("product:", 0) == 0) {
    std::string rest = id.substr(8);
    std::size_t semi = rest.find(';');
    if (semi == std::string::npos) {
      fail(ErrorKind::Parse, "bad group id '" + id + "': expected product:<id>;<id>");
    }
    LoadedGroup a = group_from_inline(rest.substr(0, semi));
    LoadedGroup b = group_from_inline(rest.substr(semi + 1));
    lg.group = group_direct_product(a.group, b.group);
    return lg;
  }
  fail(ErrorKind::Parse, "unknown group id '" + id + "'");
}

LoadedGroup load_group_file(const std::filesystem::path& path) {
  std::vector<Line> lines = read_lines(path);
  if (lines.empty()) fail(ErrorKind::Parse, path.string() + ": empty file");
  if (lines[0].tokens.size() != 1) {
    parse_fail(path, lines[0].number, "expected a single integer on the first line");
  }
  std::string ext = path.extension().string();
  if (ext == ".cayley") return cayley_from_lines(path, lines);
  if (ext == ".perm") return perm_from_lines(path, lines);
  long long n = parse_int(path, lines[0], lines[0].tokens[0]);
  if (static_cast<long long>(lines.size()) == n + 1 &&
      static_cast<long long>(lines[1].tokens.size()) == n) {
    return cayley_from_lines(path, lines);
  }
  return perm_from_lines(path, lines);
}

LoadedGroup load_group(const std::string& source, const std::filesystem::path& base_dir) {
  if (is_inline_group_id(source)) return group_from_inline(source);
  std::filesystem::path p(source);
  if (p.is_relative()) p = base_dir / p;
  return load_group_file(p);
}

LoadedAction load_action_file(const std::filesystem::path& path) {
  std::vector<Line> lines = read_lines(path);
  if (lines.empty()) fail(ErrorKind::Parse, path.string() + ": empty file");
  const Line& head = lines[0];
  if (head.tokens.size() != 4 || head.tokens[0] != "group" || head.tokens[2] != "points") {
    parse_fail(path, head.number, "expected header 'group <path-or-inline-id> points <k>'");
  }
  long long k = parse_int(path, head, head.tokens[3]);
  if (k <= 0 || k > 4096) parse_fail(path, head.number, "point count " + std::to_string(k) + " out of range");

  LoadedAction la;
  la.group = load_group(head.tokens[1], path.parent_path());

  std::size_t body = la.group.realization
                         ? la.group.realization->generator_elements.size()
                         : static_cast<std::size_t>(la.group.group->order);
  if (lines.size() < 1 + body) {
    parse_fail(path, head.number,
               "expected " + std::to_string(body) + " image lines, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Perm> images;
  for (std::size_t i = 1; i <= body; ++i) {
    images.push_back(parse_image_row(path, lines[i], static_cast<int>(k), static_cast<int>(k),
                                     "an image line"));
  }
  if (la.group.realization) {
    la.system = system_from_generators(*la.group.realization, images, static_cast<int>(k));
  } else {
    la.system = make_system(la.group.group, static_cast<int>(k), images);
  }

  std::size_t next = 1 + body;
  if (next < lines.size()) {
    const Line& wl = lines[next];
    if (wl.tokens.empty() || wl.tokens[0] != "weights") {
      parse_fail(path, wl.number, "unexpected trailing line (only 'weights ...' is allowed here)");
    }
    if (static_cast<long long>(wl.tokens.size()) != k + 1) {
      parse_fail(path, wl.number, "expected " + std::to_string(k) + " weights");
    }
    std::vector<Rational> w;
    for (long long j = 1; j <= k; ++j) {
      try {
        w.push_back(parse_rational(wl.tokens[j]));
      } catch (const Error& e) {
        parse_fail(path, wl.number, e.what());
      }
    }
    la.weights = std::move(w);
    if (next + 1 < lines.size()) {
      parse_fail(path, lines[next + 1].number, "unexpected content after the weights line");
    }
  }
  return la;
}

Rational parse_rational(const std::string& token) {
  std::size_t slash = token.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      long long n = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return Rational(n);
    }
    std::size_t used_n = 0;
    std::size_t used_d = 0;
    std::string ns = token.substr(0, slash);
    std::string ds = token.substr(slash + 1);
    long long n = std::stoll(ns, &used_n);
    long long d = std::stoll(ds, &used_d);
    if (used_n != ns.size() || used_d != ds.size() || d == 0) throw std::invalid_argument(token);
    return Rational(n, d);
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad rational '" + token + "'");
  }
}

std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

ordered_json chartable_json(const CharacterTable& t) {
  ordered_json j;
  j["order"] = t.group->order;
  j["root_order"] = t.root_order;
  j["hash"] = hash_hex(table_hash(t));
  ordered_json sizes = ordered_json::array();
  ordered_json reps = ordered_json::array();
  for (std::size_t k = 0; k < t.classes.size(); ++k) {
    sizes.push_back(t.classes[k].size());
    reps.push_back(t.class_rep[k]);
  }
  j["class_sizes"] = std::move(sizes);
  j["class_reps"] = std::move(reps);
  j["degrees"] = t.degrees;
  ordered_json rows = ordered_json::array();
  for (const ClassFunction& row : t.rows) {
    ordered_json jrow = ordered_json::array();
    for (const Cyclotomic& v : row.values) {
      require_internal(v.is_integral(), "character export hit a non-integral value");
      ordered_json coeffs = ordered_json::array();
      for (const Rational& c : v.coeffs()) coeffs.push_back(c.as_integer());
      jrow.push_back(std::move(coeffs));
    }
    rows.push_back(std::move(jrow));
  }
  j["rows"] = std::move(rows);
  return j;
}

ordered_json spectrum_json(const PointSpectrum& ps) {
  ordered_json j;
  j["table_hash"] = hash_hex(table_hash(*ps.table));
  ordered_json entries = ordered_json::array();
  for (int i : ps.support()) {
    ordered_json e;
    e["irrep"] = i;
    e["degree"] = ps.table->degrees[i];
    e["multiplicity"] = ps.mult[i];
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

ordered_json grouplike_json(const CharacterTable& t, const std::vector<int>& members) {
  ordered_json j;
  j["table_hash"] = hash_hex(table_hash(t));
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  j["members"] = sorted;
  return j;
}

}  // namespace hvn
