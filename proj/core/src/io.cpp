#include "mideal/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "mideal/errors.hpp"

namespace mideal {

namespace {

std::string strip_comments(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      in_comment = false;
      out.push_back(c);
    } else if (c == '#') {
      in_comment = true;
    } else if (!in_comment) {
      out.push_back(c);
    }
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

// "x1..x7" -> x1 x2 ... x7. Both ends need the same alphabetic prefix and
// a decimal suffix.
std::vector<std::string> expand_range(const std::string& token) {
  const std::size_t dots = token.find("..");
  const std::string lo = token.substr(0, dots);
  const std::string hi = token.substr(dots + 2);
  auto split = [&](const std::string& s) -> std::pair<std::string, long> {
    std::size_t d = s.size();
    while (d > 0 && std::isdigit(static_cast<unsigned char>(s[d - 1]))) --d;
    if (d == s.size() || d == 0)
      throw ParseError("bad variable range '" + token + "'");
    return {s.substr(0, d), std::stol(s.substr(d))};
  };
  auto [pre_lo, num_lo] = split(lo);
  auto [pre_hi, num_hi] = split(hi);
  if (pre_lo != pre_hi || num_lo > num_hi || !valid_name(pre_lo))
    throw ParseError("bad variable range '" + token + "'");
  std::vector<std::string> names;
  for (long v = num_lo; v <= num_hi; ++v)
    names.push_back(pre_lo + std::to_string(v));
  return names;
}

Ring parse_header(const std::string& line) {
  const std::string body = trim(line.substr(5));
  std::istringstream in(body);
  std::vector<std::string> names;
  std::string token;
  while (in >> token) {
    if (token.find("..") != std::string::npos) {
      for (auto& n : expand_range(token)) names.push_back(std::move(n));
    } else if (valid_name(token)) {
      names.push_back(token);
    } else {
      throw ParseError("bad variable name '" + token + "'");
    }
  }
  if (names.empty()) throw ParseError("header declares no variables");
  return Ring(std::move(names));
}

// One generator, whitespace and '*' already removed. Names are matched
// greedily, longest first; '^' takes a decimal exponent. Repeated factors
// accumulate.
Monomial parse_generator(const std::string& s, const Ring& ring,
                         const std::vector<int>& by_length) {
  if (s == "1") return Monomial::one(ring.var_count());

  std::vector<Exponent> exps(static_cast<std::size_t>(ring.var_count()), 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int var = -1;
    std::size_t var_len = 0;
    for (int idx : by_length) {
      const std::string& name = ring.name(idx);
      if (s.compare(pos, name.size(), name) == 0) {
        var = idx;
        var_len = name.size();
        break;
      }
    }
    if (var < 0) {
      std::size_t end = pos;
      while (end < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[end])) ||
              s[end] == '_'))
        ++end;
      if (end > pos &&
          std::isalpha(static_cast<unsigned char>(s[pos])))
        throw ParseError("undeclared variable '" + s.substr(pos, end - pos) +
                         "'");
      throw ParseError("malformed generator '" + s + "'");
    }
    pos += var_len;

    long long e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      bool negative = pos < s.size() && s[pos] == '-';
      if (negative) ++pos;
      std::size_t start = pos;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == start) throw ParseError("malformed exponent in '" + s + "'");
      if (negative) throw ParseError("negative exponent in '" + s + "'");
      if (pos - start > 9) throw ParseError("exponent too large in '" + s + "'");
      e = std::stoll(s.substr(start, pos - start));
    }
    const long long total = exps[static_cast<std::size_t>(var)] + e;
    if (total > std::numeric_limits<Exponent>::max())
      throw ParseError("exponent too large in '" + s + "'");
    exps[static_cast<std::size_t>(var)] = static_cast<Exponent>(total);
  }
  return Monomial(std::move(exps));
}

} // namespace

MonomialIdeal parse_ideal(const std::string& text,
                          std::vector<std::string>* warnings) {
  std::istringstream in(strip_comments(text));
  std::string line;
  std::string header;
  std::vector<std::string> chunks;
  bool have_header = false;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (!have_header) {
      if (t.rfind("vars:", 0) != 0)
        throw ParseError("expected 'vars:' header, got '" + t + "'");
      header = t;
      have_header = true;
      continue;
    }
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = t.find(',', start);
      const std::string piece =
          trim(t.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start));
      if (!piece.empty()) chunks.push_back(piece);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (!have_header) throw ParseError("missing 'vars:' header");

  const Ring ring = parse_header(header);
  std::vector<int> by_length(static_cast<std::size_t>(ring.var_count()));
  for (int i = 0; i < ring.var_count(); ++i)
    by_length[static_cast<std::size_t>(i)] = i;
  std::sort(by_length.begin(), by_length.end(), [&](int a, int b) {
    if (ring.name(a).size() != ring.name(b).size())
      return ring.name(a).size() > ring.name(b).size();
    return a < b;
  });

  std::vector<Monomial> gens;
  for (const std::string& chunk : chunks) {
    std::string cleaned;
    for (char c : chunk)
      if (c != '*' && c != ' ' && c != '\t') cleaned.push_back(c);
    if (cleaned.empty()) continue;
    gens.push_back(parse_generator(cleaned, ring, by_length));
  }
  if (gens.empty() && warnings)
    warnings->push_back("no generators: this is the zero ideal");
  return MonomialIdeal(ring, std::move(gens));
}

std::string serialize_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars:";
  for (const std::string& name : ideal.ring().names()) {
    out.push_back(' ');
    out += name;
  }
  out.push_back('\n');
  for (const Monomial& g : ideal.generators()) {
    out += g.str(ideal.ring());
    out.push_back('\n');
  }
  return out;
}

SimpleGraph parse_graph(const std::string& text) {
  std::istringstream in(strip_comments(text));
  std::string line;
  bool have_count = false;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::istringstream fields(t);
    if (!have_count) {
      if (!(fields >> n) || n < 1)
        throw ParseError("expected a positive vertex count, got '" + t + "'");
      std::string rest;
      if (fields >> rest)
        throw ParseError("unexpected text after vertex count: '" + t + "'");
      have_count = true;
      continue;
    }
    int a = 0, b = 0;
    std::string rest;
    if (!(fields >> a >> b) || (fields >> rest))
      throw ParseError("expected an edge 'i j', got '" + t + "'");
    if (a < 1 || b < 1 || a > n || b > n)
      throw ParseError("edge endpoint out of range in '" + t + "'");
    if (a == b) throw ParseError("loop edge in '" + t + "'");
    edges.emplace_back(a - 1, b - 1);
  }
  if (!have_count) throw ParseError("empty graph file");
  return SimpleGraph(n, std::move(edges));
}

std::string serialize_graph(const SimpleGraph& graph) {
  std::string out = std::to_string(graph.vertex_count());
  out.push_back('\n');
  for (auto [a, b] : graph.edges()) {
    out += std::to_string(a + 1);
    out.push_back(' ');
    out += std::to_string(b + 1);
    out.push_back('\n');
  }
  return out;
}

} // namespace mideal
