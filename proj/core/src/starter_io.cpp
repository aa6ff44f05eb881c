#include <cctype>
#include <sstream>

#include "ghd/error.hpp"
#include "ghd/starter.hpp"

namespace ghd::starter {

namespace {

std::string point_token(const Point& p) {
  return p.infinite ? "inf" + std::to_string(p.value) : std::to_string(p.value) + "_" + std::to_string(p.level);
}

Point parse_point(const std::string& tok, int lineno) {
  Label l = parse_label(tok);
  if (auto* f = std::get_if<FiniteLabel>(&l)) return Point::finite(f->residue, f->copy);
  if (auto* i = std::get_if<InfiniteLabel>(&l)) return Point::inf(i->index);
  fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad point '" + tok + "'");
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "bad " + what + " '" + s + "'");
  }
}

std::vector<std::vector<int>> parse_orbits(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorKind::ParseError, "orbits must look like (0 1)(2 3)");
    auto close = text.find(')', i);
    if (close == std::string::npos) fail(ErrorKind::ParseError, "unclosed orbit");
    std::istringstream cyc(text.substr(i + 1, close - i - 1));
    std::vector<int> c;
    for (std::string tok; cyc >> tok;) c.push_back(parse_int(tok, "orbit entry"));
    if (c.empty()) fail(ErrorKind::ParseError, "empty orbit");
    out.push_back(std::move(c));
    i = close + 1;
  }
  return out;
}

std::string format_orbits(const std::vector<std::vector<int>>& orbits) {
  std::string out;
  for (const auto& c : orbits) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
    out += ')';
  }
  return out;
}

std::string triple_line(const Triple& t, const std::string& tag) {
  return point_token(t[0]) + " " + point_token(t[1]) + " " + point_token(t[2]) + " [" + tag + "]\n";
}

}  // namespace

std::string format(const TransitiveStarterAdder& sa) {
  std::string out = "kind=transitive n=" + std::to_string(sa.n) + " x=" + std::to_string(sa.x);
  if (!sa.orbits.empty()) out += " orbits=" + format_orbits(sa.orbits);
  if (sa.inf_base) out += " inf_base=" + std::to_string(sa.inf_base);
  out += '\n';
  for (const auto& b : sa.blocks) out += triple_line(b.points, std::to_string(b.adder));
  return out;
}

std::string format(const IntransitiveStarterAdder& sa) {
  std::string out = "kind=intransitive n=" + std::to_string(sa.n) + " x=" + std::to_string(sa.x) + "\n";
  std::vector<Role> order = sa.line_order;
  if (order.size() != sa.S.size() + sa.R.size() + sa.C.size()) {
    order.assign(sa.S.size(), Role::S);
    for (std::size_t j = 0; j < std::max(sa.R.size(), sa.C.size()); ++j) {
      if (j < sa.R.size()) order.push_back(Role::R);
      if (j < sa.C.size()) order.push_back(Role::C);
    }
  }
  std::size_t s = 0, r = 0, c = 0;
  for (Role role : order) {
    if (role == Role::S && s < sa.S.size()) {
      out += triple_line(sa.S[s].points, std::to_string(sa.S[s].adder));
      ++s;
    } else if (role == Role::R && r < sa.R.size()) {
      out += triple_line(sa.R[r++], "R");
    } else if (role == Role::C && c < sa.C.size()) {
      out += triple_line(sa.C[c++], "C");
    }
  }
  return out;
}

AnyStarter parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::string kind;
  int n = -1, x = -1, inf_base = 0;
  std::vector<std::vector<int>> orbits;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto pos = line.find("orbits=");
    if (pos != std::string::npos) {
      auto end = line.find(')', line.rfind('('));
      if (end == std::string::npos) fail(ErrorKind::ParseError, "unclosed orbits");
      std::string spec = line.substr(pos + 7, end + 1 - pos - 7);
      std::string cleaned;
      for (std::size_t i = 0; i < spec.size(); ++i)
        if (!(spec[i] == ' ' && i > 0 && spec[i - 1] == ')')) cleaned += spec[i];
      orbits = parse_orbits(cleaned);
      line.erase(pos, end + 1 - pos);
    }
    std::istringstream hdr(line);
    for (std::string tok; hdr >> tok;) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) fail(ErrorKind::ParseError, "header token '" + tok + "' is not key=value");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "kind") kind = val;
      else if (key == "n") n = parse_int(val, "n");
      else if (key == "x") x = parse_int(val, "x");
      else if (key == "inf_base") inf_base = parse_int(val, "inf_base");
      else fail(ErrorKind::ParseError, "unknown header key '" + key + "'");
    }
    break;
  }
  if ((kind != "transitive" && kind != "intransitive") || n < 0 || x < 0)
    fail(ErrorKind::ParseError, "header must give kind=transitive|intransitive, n and x");

  TransitiveStarterAdder t{n, x, {}, orbits, inf_base};
  IntransitiveStarterAdder it{n, x, {}, {}, {}, {}};
  if (kind == "intransitive" && (!orbits.empty() || inf_base))
    fail(ErrorKind::ParseError, "orbits and inf_base apply to transitive starters only");
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto lb = line.find('['), rb = line.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": missing [adder]");
    std::istringstream pts(line.substr(0, lb));
    std::vector<Point> ps;
    for (std::string tok; pts >> tok;) ps.push_back(parse_point(tok, lineno));
    if (ps.size() != 3) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": a block needs three points");
    Triple tr{ps[0], ps[1], ps[2]};
    std::string tag = line.substr(lb + 1, rb - lb - 1);
    tag.erase(0, tag.find_first_not_of(' '));
    tag.erase(tag.find_last_not_of(' ') + 1);
    if (tag == "R" || tag == "C") {
      if (kind != "intransitive") fail(ErrorKind::ParseError, "R/C blocks belong to intransitive starters");
      (tag == "R" ? it.R : it.C).push_back(tr);
      it.line_order.push_back(tag == "R" ? Role::R : Role::C);
      continue;
    }
    int a = parse_int(tag, "adder");
    if (kind == "transitive") {
      t.blocks.push_back({tr, a});
    } else {
      it.S.push_back({tr, a});
      it.line_order.push_back(Role::S);
    }
  }
  if (kind == "transitive") return t;
  return it;
}

}  // namespace ghd::starter
