#include "vogan/types.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>

namespace vogan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::InvalidCircling: return "InvalidCircling";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotPressable: return "NotPressable";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::SL: return "SL";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::D21A: return "D21A";
    case Family::F4: return "F4";
    case Family::G3: return "G3";
  }
  return "?";
}

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string_view to_string(Color c) {
  switch (c) {
    case Color::White: return "white";
    case Color::Grey: return "grey";
    case Color::Black: return "black";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view s) {
  for (Family f : {Family::SL, Family::B, Family::C, Family::D, Family::D21A, Family::F4,
                   Family::G3}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

std::optional<Parity> parity_from_string(std::string_view s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  return std::nullopt;
}

std::optional<Color> color_from_string(std::string_view s) {
  if (s == "white") return Color::White;
  if (s == "grey") return Color::Grey;
  if (s == "black") return Color::Black;
  return std::nullopt;
}

std::string FamilySpec::name() const {
  switch (family) {
    case Family::SL: return "SL(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::B: return "B(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::C: return "C(" + std::to_string(n) + ")";
    case Family::D: return "D(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::D21A: return "D(2,1;" + to_string(alpha) + ")";
    case Family::F4: return "F(4)";
    case Family::G3: return "G(3)";
  }
  return "?";
}

FamilySpec make_spec(Family family, int m, int n, Rational alpha) {
  FamilySpec s;
  s.family = family;
  s.m = m;
  s.n = n;
  s.alpha = alpha;
  s.parity_rule = family == Family::SL ? Parity::Even : Parity::Odd;
  return s;
}

const Node& Diagram::node(NodeId id) const {
  if (!has_node(id)) throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(id));
  return nodes[id - 1];
}

const Edge* Diagram::edge_between(NodeId a, NodeId b) const {
  for (const Edge& e : edges) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return &e;
  }
  return nullptr;
}

std::vector<NodeId> Diagram::neighbors(NodeId id) const {
  std::vector<NodeId> out;
  for (const Edge& e : edges) {
    if (e.touches(id)) out.push_back(e.other(id));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> Diagram::even_nodes() const {
  std::vector<NodeId> out;
  for (const Node& n : nodes) {
    if (n.parity == Parity::Even) out.push_back(n.id);
  }
  return out;
}

std::vector<NodeId> Diagram::dark_nodes() const {
  std::vector<NodeId> out;
  for (const Node& n : nodes) {
    if (n.color != Color::White) out.push_back(n.id);
  }
  return out;
}

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidDiagram, msg); }

}  // namespace

void validate_structure(const Diagram& d) {
  if (d.nodes.empty()) bad("diagram has no nodes");
  if (d.size() > kMaxNodes) bad("diagram has more than 64 nodes");
  int gcd = 0;
  for (int k = 0; k < d.size(); ++k) {
    const Node& n = d.nodes[k];
    if (n.id != k + 1) bad("node ids must be consecutive starting at 1");
    if (n.a_label <= 0) bad("a-label of node " + std::to_string(n.id) + " is not positive");
    if ((n.color == Color::White) != (n.parity == Parity::Even)) {
      bad("node " + std::to_string(n.id) + ": white iff even");
    }
    gcd = std::gcd(gcd, n.a_label);
  }
  if (gcd != 1) bad("a-labels have a common factor " + std::to_string(gcd));
  if (!d.has_node(d.lowest)) bad("lowest root is not a node");

  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : d.edges) {
    if (!d.has_node(e.u) || !d.has_node(e.v)) bad("edge references a missing node");
    if (e.u >= e.v) bad("edges must satisfy u < v");
    if (!seen.insert({e.u, e.v}).second) bad("duplicate edge");
    if (e.multiplicity < 1 || e.multiplicity > 4) bad("edge multiplicity out of range");
    if (e.multiplicity == 1 && e.longer) bad("single edge with a longer endpoint");
    if (e.multiplicity > 1 && (!e.longer || !e.touches(*e.longer))) {
      bad("multiple edge needs a longer endpoint");
    }
  }
  if (!std::is_sorted(d.edges.begin(), d.edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
      })) {
    bad("edges must be sorted by (u, v)");
  }

  std::vector<bool> reached(d.size(), false);
  std::queue<NodeId> q;
  q.push(1);
  reached[0] = true;
  while (!q.empty()) {
    NodeId x = q.front();
    q.pop();
    for (NodeId y : d.neighbors(x)) {
      if (!reached[y - 1]) {
        reached[y - 1] = true;
        q.push(y);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) bad("diagram is not connected");
  if (d.dark_nodes().empty()) bad("diagram has no dark node");
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s, std::int64_t& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  std::int64_t num = 0;
  std::int64_t den = 1;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
  } else {
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den)) {
      return std::nullopt;
    }
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace vogan
