#include "latlab/json_io.hpp"

#include <cstdint>
#include <stdexcept>

namespace latlab {

Json to_json(const Int& v) {
  if (fits_int64(v)) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Json to_json(const LatticeVector& v) {
  Json arr = Json::array();
  for (const Int& c : v.coords) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const Vec22& v) {
  return Json::array({to_json(v.k), to_json(v.l), to_json(v.m), to_json(v.n)});
}

Json to_json(const GramLattice& L) {
  Json gram = Json::array();
  for (const auto& row : L.gram_rows()) {
    Json r = Json::array();
    for (const Int& v : row) r.push_back(to_json(v));
    gram.push_back(std::move(r));
  }
  return Json{{"rank", L.rank()}, {"gram", std::move(gram)}};
}

Json to_json(const LatticeClass& c) {
  return Json{{"even", c.is_even},
              {"abs_det", to_json(c.abs_det)},
              {"signature", Json::array({c.signature.first, c.signature.second})}};
}

Json to_json(const RootFamily& f) {
  return Json{{"l", to_json(f.l)},
              {"n", to_json(f.n)},
              {"k0", to_json(f.k0)},
              {"m0", to_json(f.m0)}};
}

Json to_json(const OrthogonalityCertificate& c) {
  return Json{{"rho", to_json(c.rho)},
              {"alpha", to_json(c.alpha)},
              {"inner", to_json(c.inner_value)},
              {"norm", to_json(c.alpha_norm)}};
}

Json to_json(const HeightOutcome& o) {
  return Json{{"variant", o.kind == HeightOutcome::Kind::ExactZero ? "ExactZero"
                                                                   : "SmallNonzero"},
              {"alpha", to_json(o.alpha)},
              {"bound_num", to_json(Int(boost::multiprecision::numerator(o.bound)))},
              {"bound_den", to_json(Int(boost::multiprecision::denominator(o.bound)))}};
}

Json to_json(const OrbitResult& o) {
  Json vecs = Json::array();
  for (const auto& v : o.vectors) vecs.push_back(to_json(v));
  return Json{{"vectors", std::move(vecs)}, {"clipped", o.frontier_clipped}};
}

Json to_json(const SplitRoots& s) {
  Json pos = Json::array(), neg = Json::array();
  for (const auto& v : s.positives) pos.push_back(to_json(v));
  for (const auto& v : s.negatives) neg.push_back(to_json(v));
  return Json{{"positives", std::move(pos)}, {"negatives", std::move(neg)}};
}

Json to_json(const CandidateBasis& b) {
  Json cands = Json::array();
  for (const auto& v : b.candidates) cands.push_back(to_json(v));
  Json gram = Json::array();
  for (const auto& row : b.gram) {
    Json r = Json::array();
    for (const Int& v : row) r.push_back(to_json(v));
    gram.push_back(std::move(r));
  }
  return Json{{"candidates", std::move(cands)},
              {"box", b.search_box},
              {"gram", std::move(gram)}};
}

Json to_json(const GenerationReport& r) {
  Json cands = Json::array(), unreach = Json::array();
  for (const auto& v : r.candidates) cands.push_back(to_json(v));
  for (const auto& v : r.unreachable) unreach.push_back(to_json(v));
  return Json{{"box", r.box},
              {"candidates", std::move(cands)},
              {"unreachable", std::move(unreach)},
              {"checked_count", r.checked_count}};
}

Json to_json(const CartanViolation& v) {
  return Json{{"condition", cartan_condition_name(v.condition)},
              {"i", v.i},
              {"j", v.j}};
}

Json to_json(const std::vector<CartanViolation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return Json{{"violations", std::move(arr)}};
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

Int parse_int(std::string s) {
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  if (s.empty()) throw std::invalid_argument("empty integer");
  if (s.find_first_not_of("0123456789-") != std::string::npos || s.find('-', 1) != std::string::npos)
    throw std::invalid_argument("bad integer: '" + s + "'");
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer: '" + s + "'");
  }
}

}  // namespace

Vec22 parse_vec22(const std::string& s) {
  const auto parts = split(strip_spaces(s), ',');
  if (parts.size() != 4) throw std::invalid_argument("expected 4 comma-separated integers");
  return Vec22(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]),
               parse_int(parts[3]));
}

LatticeVector parse_vector(const std::string& s) {
  const auto parts = split(strip_spaces(s), ',');
  LatticeVector v;
  v.coords.reserve(parts.size());
  for (const auto& p : parts) v.coords.push_back(parse_int(p));
  return v;
}

Rat parse_rat(const std::string& raw) {
  const std::string s = strip_spaces(raw);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    const Int num = parse_int(s.substr(0, slash));
    const Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  }
  const std::size_t dot = s.find('.');
  if (dot == std::string::npos) return Rat(parse_int(s));
  std::string head = s.substr(0, dot);
  const std::string tail = s.substr(dot + 1);
  if (tail.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad decimal: '" + raw + "'");
  bool negative = false;
  if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
    negative = head[0] == '-';
    head = head.substr(1);
  }
  const Int ipart = head.empty() ? Int(0) : parse_int(head);
  Int scale = 1;
  Int frac = 0;
  for (char c : tail) {
    frac = frac * 10 + (c - '0');
    scale *= 10;
  }
  Rat value = Rat(ipart) + Rat(frac, scale);
  return negative ? -value : value;
}

CertifiedReal parse_real(const std::string& raw) {
  const std::string s = strip_spaces(raw);
  const std::size_t pos = s.find("sqrt(");
  if (pos == std::string::npos) return CertifiedReal::rational(parse_rat(s));
  if (s.back() != ')') throw std::invalid_argument("unterminated sqrt: '" + raw + "'");
  const Int d = parse_int(s.substr(pos + 5, s.size() - pos - 6));
  std::string before = s.substr(0, pos);
  if (!before.empty() && before.back() == '*') before.pop_back();

  // Split "a+b" at the last sign that separates the two terms.
  std::string a_str = "0", b_str = before;
  std::size_t cut = std::string::npos;
  for (std::size_t i = before.size(); i-- > 1;) {
    if ((before[i] == '+' || before[i] == '-') && before[i - 1] != '/' &&
        before[i - 1] != '+' && before[i - 1] != '-') {
      cut = i;
      break;
    }
  }
  if (cut != std::string::npos) {
    a_str = before.substr(0, cut);
    b_str = before.substr(cut);
  }
  Rat b;
  if (b_str.empty() || b_str == "+") b = 1;
  else if (b_str == "-") b = -1;
  else b = parse_rat(b_str);
  return CertifiedReal::quadratic(parse_rat(a_str), b, d);
}

namespace {

template <typename T, typename Parse>
std::vector<std::vector<T>> parse_matrix(const std::string& s, Parse parse) {
  std::vector<std::vector<T>> rows;
  for (const auto& row : split(strip_spaces(s), ';')) {
    std::vector<T> r;
    for (const auto& cell : split(row, ',')) r.push_back(parse(cell));
    if (!rows.empty() && r.size() != rows.front().size())
      throw std::invalid_argument("matrix rows have unequal lengths");
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::vector<std::vector<Rat>> parse_rat_matrix(const std::string& s) {
  return parse_matrix<Rat>(s, [](const std::string& c) { return parse_rat(c); });
}

std::vector<std::vector<Int>> parse_int_matrix(const std::string& s) {
  return parse_matrix<Int>(s, [](const std::string& c) { return parse_int(c); });
}

}  // namespace latlab
