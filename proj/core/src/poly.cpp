#include "gds/poly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "gds/error.hpp"

namespace gds {

// ---------------------------------------------------------------------------
// Variables

namespace {

struct Registry {
  std::mutex mutex;
  std::vector<std::unique_ptr<VarInfo>> infos;
  std::map<std::tuple<VarKind, std::string, int>, const VarInfo*> index;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

VarId VarId::intern(VarKind kind, std::string_view name, int rank) {
  Registry& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mutex);
  auto key = std::make_tuple(kind, std::string(name), rank);
  if (auto it = reg.index.find(key); it != reg.index.end()) return VarId(it->second);
  auto info = std::make_unique<VarInfo>(
      VarInfo{kind, std::string(name), rank, static_cast<std::uint32_t>(reg.infos.size())});
  const VarInfo* raw = info.get();
  reg.infos.push_back(std::move(info));
  reg.index.emplace(std::move(key), raw);
  return VarId(raw);
}

VarId VarId::h() {
  static const VarId v = intern(VarKind::kH, "", 0);
  return v;
}

VarId VarId::x0() {
  static const VarId v = intern(VarKind::kX0, "", 0);
  return v;
}

VarId VarId::node(std::string_view node_id, int level) {
  return intern(VarKind::kXNode, node_id, level);
}

VarId VarId::t() {
  static const VarId v = intern(VarKind::kT, "", 0);
  return v;
}

VarId VarId::w() {
  static const VarId v = intern(VarKind::kW, "", 0);
  return v;
}

VarId VarId::sym(std::string_view name, int index) { return intern(VarKind::kSym, name, index); }

std::string VarId::to_string() const {
  switch (kind()) {
    case VarKind::kH: return "h";
    case VarKind::kX0: return "X_0";
    case VarKind::kXNode: return "X_" + name();
    case VarKind::kT: return "T";
    case VarKind::kW: return "W";
    case VarKind::kSym: return name();
  }
  return "?";
}

namespace {

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_') {
      out += "\\_";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string VarId::to_latex() const {
  switch (kind()) {
    case VarKind::kH: return "h";
    case VarKind::kX0: return "X_{0}";
    case VarKind::kXNode: return "X_{" + latex_escape(name()) + "}";
    case VarKind::kT: return "T";
    case VarKind::kW: return "W";
    case VarKind::kSym: {
      // y_3 -> y_{3}
      const auto us = name().find('_');
      if (us == std::string::npos) return name();
      return name().substr(0, us) + "_{" + latex_escape(name().substr(us + 1)) + "}";
    }
  }
  return "?";
}

bool var_order_less(VarId a, VarId b) {
  if (a == b) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return a.name() < b.name();
}

void sort_vars(std::vector<VarId>& vars) { std::sort(vars.begin(), vars.end(), var_order_less); }

// ---------------------------------------------------------------------------
// Monomials

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial out;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!out.factors_.empty() && out.factors_.back().first == v) {
      out.factors_.back().second += e;
    } else {
      out.factors_.emplace_back(v, e);
    }
  }
  return out;
}

Monomial Monomial::of(VarId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

std::uint32_t Monomial::degree(VarId v) const {
  for (const auto& [var, e] : factors_) {
    if (var == v) return e;
  }
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  std::size_t j = 0;
  for (const auto& [v, e] : factors_) {
    while (j < other.factors_.size() && other.factors_[j].first < v) ++j;
    if (j == other.factors_.size() || other.factors_[j].first != v) return false;
    if (other.factors_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < factors_.size() && j < other.factors_.size()) {
    if (factors_[i].first == other.factors_[j].first) {
      out.factors_.emplace_back(factors_[i].first, factors_[i].second + other.factors_[j].second);
      ++i;
      ++j;
    } else if (factors_[i].first < other.factors_[j].first) {
      out.factors_.push_back(factors_[i++]);
    } else {
      out.factors_.push_back(other.factors_[j++]);
    }
  }
  for (; i < factors_.size(); ++i) out.factors_.push_back(factors_[i]);
  for (; j < other.factors_.size(); ++j) out.factors_.push_back(other.factors_[j]);
  return out;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  std::size_t i = 0;
  for (const auto& [v, e] : other.factors_) {
    std::uint32_t sub = 0;
    if (i < factors_.size() && factors_[i].first == v) sub = factors_[i++].second;
    if (e > sub) out.factors_.emplace_back(v, e - sub);
  }
  return out;
}

Monomial Monomial::without(VarId v) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first != v) out.factors_.push_back(f);
  }
  return out;
}

Monomial Monomial::with_exponent(VarId v, std::uint32_t exponent) const {
  Monomial out = without(v);
  if (exponent == 0) return out;
  auto pos = std::lower_bound(out.factors_.begin(), out.factors_.end(), v,
                              [](const Factor& f, VarId x) { return f.first < x; });
  out.factors_.insert(pos, Factor{v, exponent});
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    const auto& fa = a.factors_[i];
    const auto& fb = b.factors_[j];
    if (fa.first == fb.first) {
      if (fa.second != fb.second) return fa.second < fb.second;
      ++i;
      ++j;
    } else {
      // The side carrying the more significant variable is larger.
      return fb.first < fa.first;
    }
  }
  return j < b.factors_.size();
}

// ---------------------------------------------------------------------------
// Polynomials

Poly::Poly(const Rat& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

Poly Poly::var(VarId v, std::uint32_t exponent) { return term(Rat(1), Monomial::of(v, exponent)); }

Poly Poly::term(const Rat& coeff, Monomial mono) {
  Poly p;
  if (!coeff.is_zero()) p.terms_.emplace(std::move(mono), coeff);
  return p;
}

Poly Poly::linear(VarId v, const Rat& c) { return var(v) - Poly(c); }

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Poly::constant_term() const { return coefficient(Monomial()); }

Rat Poly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::uint32_t Poly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool Poly::involves(VarId v) const {
  for (const auto& [m, c] : terms_) {
    if (m.degree(v) > 0) return true;
  }
  return false;
}

std::vector<VarId> Poly::variables() const {
  std::set<VarId> seen;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) seen.insert(f.first);
  }
  std::vector<VarId> out(seen.begin(), seen.end());
  sort_vars(out);
  return out;
}

Poly Poly::coefficient_in(VarId v, std::uint32_t k) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (m.degree(v) == k) out.add_term(m.without(v), c);
  }
  return out;
}

void Poly::add_term(const Monomial& mono, const Rat& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

namespace {

// Exponent layout for packing monomials of a product into one word.
struct Packing {
  std::vector<VarId> vars;
  std::vector<unsigned> shift;
  std::vector<std::uint64_t> mask;
};

std::optional<Packing> packing_for(const Poly::TermMap& a, const Poly::TermMap& b) {
  std::map<VarId, std::uint64_t> top;
  for (const auto* terms : {&a, &b}) {
    std::map<VarId, std::uint64_t> here;
    for (const auto& [m, c] : *terms) {
      for (const auto& [v, e] : m.factors()) here[v] = std::max<std::uint64_t>(here[v], e);
    }
    for (const auto& [v, e] : here) top[v] += e;
  }
  Packing p;
  unsigned used = 0;
  for (const auto& [v, e] : top) {
    unsigned bits = 1;
    while ((std::uint64_t{1} << bits) <= e) ++bits;
    if (used + bits > 64) return std::nullopt;
    p.vars.push_back(v);
    p.shift.push_back(used);
    p.mask.push_back(bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1);
    used += bits;
  }
  return p;
}

std::uint64_t pack(const Monomial& m, const Packing& p) {
  std::uint64_t key = 0;
  std::size_t i = 0;
  for (const auto& [v, e] : m.factors()) {
    while (p.vars[i] != v) ++i;
    key |= static_cast<std::uint64_t>(e) << p.shift[i];
  }
  return key;
}

Monomial unpack(std::uint64_t key, const Packing& p) {
  std::vector<Monomial::Factor> fs;
  for (std::size_t i = 0; i < p.vars.size(); ++i) {
    const auto e = static_cast<std::uint32_t>((key >> p.shift[i]) & p.mask[i]);
    if (e != 0) fs.emplace_back(p.vars[i], e);
  }
  return Monomial::from_factors(std::move(fs));
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [v, e] : m.factors()) {
      h ^= (static_cast<std::size_t>(v.id()) << 20 ^ e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Coefficients scaled to integers by the common denominator.
mpz_class scale_to_integers(const Poly::TermMap& terms, std::vector<mpz_class>& out) {
  mpz_class den = 1;
  for (const auto& [m, c] : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
  out.reserve(terms.size());
  for (const auto& [m, c] : terms) out.push_back(c.raw().get_num() * (den / c.raw().get_den()));
  return den;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (b.is_constant()) return b.terms_.begin()->second.is_one() ? a : a * b.constant_term();
  if (a.is_constant()) return a.terms_.begin()->second.is_one() ? b : b * a.constant_term();
  std::vector<mpz_class> ia;
  std::vector<mpz_class> ib;
  const mpz_class den = scale_to_integers(a.terms_, ia) * scale_to_integers(b.terms_, ib);
  std::vector<std::pair<Monomial, mpz_class>> sorted;

  if (const auto packing = packing_for(a.terms_, b.terms_)) {
    std::vector<std::uint64_t> kb;
    kb.reserve(b.terms_.size());
    for (const auto& [m, c] : b.terms_) kb.push_back(pack(m, *packing));
    std::unordered_map<std::uint64_t, mpz_class> acc;
    acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1U << 20));
    std::size_t i = 0;
    for (const auto& [ma, ca] : a.terms_) {
      const std::uint64_t ka = pack(ma, *packing);
      for (std::size_t j = 0; j < kb.size(); ++j) {
        mpz_addmul(acc[ka + kb[j]].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
      }
      ++i;
    }
    sorted.reserve(acc.size());
    for (auto& [k, c] : acc) {
      if (sgn(c) != 0) sorted.emplace_back(unpack(k, *packing), std::move(c));
    }
  } else {
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1U << 20));
    std::size_t i = 0;
    for (const auto& [ma, ca] : a.terms_) {
      std::size_t j = 0;
      for (const auto& [mb, cb] : b.terms_) {
        mpz_addmul(acc[ma * mb].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
        ++j;
      }
      ++i;
    }
    sorted.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (sgn(c) != 0) sorted.emplace_back(m, std::move(c));
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Poly out;
  for (auto& [m, c] : sorted) {
    mpq_class q(std::move(c), den);
    q.canonicalize();
    out.terms_.emplace_hint(out.terms_.end(), std::move(m), Rat(std::move(q)));
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

namespace {

// Factors of a monomial in the fixed presentation order.
std::vector<Monomial::Factor> ordered_factors(const Monomial& m) {
  std::vector<Monomial::Factor> fs = m.factors();
  std::sort(fs.begin(), fs.end(),
            [](const auto& x, const auto& y) { return var_order_less(x.first, y.first); });
  return fs;
}

// Lexicographic comparison under the presentation order; true if a > b.
bool presentation_greater(const std::vector<Monomial::Factor>& a,
                          const std::vector<Monomial::Factor>& b) {
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) return var_order_less(a[i].first, b[i].first);
    if (a[i].second != b[i].second) return a[i].second > b[i].second;
  }
  return i < a.size();
}

struct PrintedTerm {
  std::vector<Monomial::Factor> factors;
  const Rat* coeff;
};

std::vector<PrintedTerm> presentation_terms(const Poly::TermMap& terms) {
  std::vector<PrintedTerm> out;
  out.reserve(terms.size());
  for (const auto& [m, c] : terms) out.push_back({ordered_factors(m), &c});
  std::sort(out.begin(), out.end(), [](const PrintedTerm& x, const PrintedTerm& y) {
    return presentation_greater(x.factors, y.factors);
  });
  return out;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : presentation_terms(terms_)) {
    const Rat& c = *t.coeff;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rat mag = negative ? -c : c;
    std::string body;
    for (const auto& [v, e] : t.factors) {
      if (!body.empty()) body += "*";
      body += v.to_string();
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += body;
    } else {
      out += mag.to_string() + "*" + body;
    }
  }
  return out;
}

std::vector<std::pair<std::vector<Monomial::Factor>, Rat>> Poly::display_terms() const {
  std::vector<std::pair<std::vector<Monomial::Factor>, Rat>> out;
  for (auto& t : presentation_terms(terms_)) out.emplace_back(std::move(t.factors), *t.coeff);
  return out;
}

std::string Poly::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : presentation_terms(terms_)) {
    const Rat& c = *t.coeff;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rat mag = negative ? -c : c;
    std::string body;
    for (const auto& [v, e] : t.factors) {
      if (!body.empty()) body += " ";
      body += v.to_latex();
      if (e > 1) body += "^{" + std::to_string(e) + "}";
    }
    std::string coeff;
    if (mag.is_integer()) {
      coeff = mag.to_string();
    } else {
      coeff = "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";
    }
    if (body.empty()) {
      out += coeff;
    } else if (mag.is_one()) {
      out += body;
    } else {
      out += coeff + " " + body;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& out, const Poly& p) { return out << p.to_string(); }

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly sub(const Poly& a, const Poly& b) { return a - b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }

Poly pow(const Poly& base, std::uint32_t exponent) {
  Poly result(1);
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

Poly substitute(const Poly& p, const Substitution& s) {
  if (s.empty()) return p;
  // Powers of each image, grown on demand.
  std::map<VarId, std::vector<Poly>> powers;
  auto power_of = [&](VarId v, const Poly& image, std::uint32_t e) -> const Poly& {
    auto& table = powers[v];
    if (table.empty()) table.push_back(Poly(1));
    while (table.size() <= e) table.push_back(table.back() * image);
    return table[e];
  };
  // Group terms by their mapped part so each product is formed once.
  std::map<Monomial, Poly> by_mapped;
  for (const auto& [m, c] : p.terms()) {
    Monomial mapped;
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      if (s.count(v)) {
        mapped = mapped * Monomial::of(v, e);
      } else {
        kept = kept * Monomial::of(v, e);
      }
    }
    by_mapped[mapped] += Poly::term(c, kept);
  }
  Poly out;
  for (const auto& [mapped, rest] : by_mapped) {
    if (rest.is_zero()) continue;
    Poly prod = rest;
    for (const auto& [v, e] : mapped.factors()) prod = prod * power_of(v, s.at(v), e);
    if (out.is_zero()) {
      out = std::move(prod);
    } else {
      out += prod;
    }
  }
  return out;
}

Poly substitute_product(const std::vector<Poly>& factors, const Substitution& s) {
  Poly out(1);
  for (const auto& f : factors) {
    out = out * substitute(f, s);
    if (out.is_zero()) break;
  }
  return out;
}

std::optional<Poly> try_divide_exact(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  if (p.is_zero()) return Poly();
  if (q.size() == 1) {
    const auto& [mq, cq] = *q.terms().begin();
    Poly out;
    for (const auto& [m, c] : p.terms()) {
      if (!mq.divides(m)) return std::nullopt;
      out += Poly::term(c / cq, mq.quotient_of(m));
    }
    return out;
  }
  // Degree bounds: every intermediate remainder of an exact division stays
  // within the per-variable degrees of p.
  std::map<VarId, std::uint32_t> bound;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.factors()) bound[v] = std::max(bound[v], e);
  }
  auto within_bounds = [&](const Monomial& m) {
    for (const auto& [v, e] : m.factors()) {
      auto it = bound.find(v);
      if (it == bound.end() || e > it->second) return false;
    }
    return true;
  };

  const auto& [lead_mono, lead_coeff] = *q.terms().rbegin();
  Poly rem = p;
  Poly quotient;
  while (!rem.is_zero()) {
    const auto& [mr, cr] = *rem.terms().rbegin();
    if (!lead_mono.divides(mr) || !within_bounds(mr)) return std::nullopt;
    const Monomial t = lead_mono.quotient_of(mr);
    const Rat c = cr / lead_coeff;
    quotient.add_term(t, c);
    for (const auto& [mq, cq] : q.terms()) rem.add_term(t * mq, -(c * cq));
  }
  return quotient;
}

Poly divide_exact(const Poly& p, const Poly& q) {
  auto r = try_divide_exact(p, q);
  if (!r) {
    throw Error(ErrorCode::kNotDivisible, "(" + q.to_string() + ") does not divide (" +
                                              (p.size() > 8 ? std::string("...") : p.to_string()) +
                                              ")");
  }
  return *std::move(r);
}

Poly divide_by_var_power(const Poly& p, VarId v, std::uint32_t k) {
  if (k == 0) return p;
  return divide_exact(p, Poly::var(v, k));
}

Poly partial(const Poly& p, VarId v) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t e = m.degree(v);
    if (e == 0) continue;
    out.add_term(m.with_exponent(v, e - 1), c * Rat(static_cast<std::int64_t>(e)));
  }
  return out;
}

std::optional<std::uint32_t> order_in(const Poly& p, const std::set<VarId>& vars) {
  std::optional<std::uint32_t> best;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t d = 0;
    for (const auto& [v, e] : m.factors()) {
      if (vars.count(v)) d += e;
    }
    if (!best || d < *best) best = d;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Reader

VarId default_resolve(std::string_view ident) {
  if (ident == "h") return VarId::h();
  if (ident == "X_0") return VarId::x0();
  if (ident == "T") return VarId::t();
  if (ident == "W") return VarId::w();
  return VarId::sym(ident);
}

namespace {

class PolyReader {
 public:
  PolyReader(std::string_view text, const VarResolver& resolve) : text_(text), resolve_(resolve) {}

  Poly read() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                "polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                    ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc;
    bool negative = false;
    skip_space();
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    Poly t = term();
    acc = negative ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not exact");
      return Poly(Rat::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Poly::var(resolve_(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VarResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VarResolver& resolve) {
  return PolyReader(text, resolve).read();
}

}  // namespace gds
