#include "quantrel/quantale.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "quantrel/error.hpp"

namespace quantrel {

std::string_view to_string(QuantaleKind kind) {
  switch (kind) {
    case QuantaleKind::boolean:
      return "boolean";
    case QuantaleKind::tropical:
      return "tropical";
    case QuantaleKind::natural:
      return "natural";
    case QuantaleKind::heyting:
      return "heyting";
    case QuantaleKind::language:
      return "language";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Derived operations

bool Quantale::equal(const QElem& a, const QElem& b) const {
  require(a);
  require(b);
  return a == b;
}

QElem Quantale::join_all(std::span<const QElem> xs) const {
  QElem acc = bottom();
  for (const auto& x : xs) acc = join(acc, x);
  return acc;
}

QElem Quantale::meet_all(std::span<const QElem> xs) const {
  if (xs.empty()) return top_or_throw();
  QElem acc = xs.front();
  for (const auto& x : xs.subspan(1)) acc = meet(acc, x);
  return acc;
}

QElem Quantale::scalar_interior(const QElem& a) const {
  require(a);
  QElem best = bottom();
  for (const auto& e : idempotents()) {
    if (leq(e, a)) best = join(best, e);
  }
  return best;
}

bool Quantale::is_idempotent(const QElem& a) const {
  return leq(a, unit()) && tensor(a, a) == a;
}

void Quantale::require(const QElem& a) const {
  if (!contains(a)) {
    throw DomainMismatch("scalar is not an element of the " + name() +
                         " quantale");
  }
}

QElem Quantale::top_or_throw() const {
  auto t = top();
  if (!t) throw Unsupported("the " + name() + " quantale has no finite top");
  return *t;
}

bool same_quantale(const QuantalePtr& a, const QuantalePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b) && b->same_as(*a);
}

namespace {

// ---------------------------------------------------------------------------
// Boolean: ({0,1}, <=, and, 1, or, 0)

class BooleanQuantale final : public Quantale {
 public:
  QuantaleKind kind() const override { return QuantaleKind::boolean; }
  std::string name() const override { return "boolean"; }
  bool contains(const QElem& a) const override {
    return std::holds_alternative<bool>(a);
  }
  // Both operands are checked before combining; no short-circuiting.
  bool leq(const QElem& a, const QElem& b) const override {
    const bool x = v(a), y = v(b);
    return !x || y;
  }
  QElem join(const QElem& a, const QElem& b) const override {
    const bool x = v(a), y = v(b);
    return x || y;
  }
  QElem meet(const QElem& a, const QElem& b) const override {
    const bool x = v(a), y = v(b);
    return x && y;
  }
  QElem tensor(const QElem& a, const QElem& b) const override {
    return meet(a, b);
  }
  QElem residual(const QElem& a, const QElem& b) const override {
    const bool x = v(a), y = v(b);
    return !y || x;
  }
  QElem unit() const override { return true; }
  QElem bottom() const override { return false; }
  std::optional<QElem> top() const override { return QElem{true}; }
  const std::vector<QElem>& idempotents() const override {
    static const std::vector<QElem> kIdem{false, true};
    return kIdem;
  }
  std::string format(const QElem& a) const override {
    return v(a) ? "1" : "0";
  }

 private:
  bool v(const QElem& a) const {
    require(a);
    return std::get<bool>(a);
  }
};

// ---------------------------------------------------------------------------
// Extended nonnegative numbers under reversed order: ([0,inf], >=, +, 0, min,
// inf). Shared by the tropical (rational) and natural carriers.

template <typename T>
struct NumericTraits;

template <>
struct NumericTraits<Rational> {
  static constexpr QuantaleKind kind = QuantaleKind::tropical;
  static constexpr const char* name = "tropical";
  static bool valid(const Rational& r) { return r >= 0; }
  static Rational add(const Rational& a, const Rational& b) { return a + b; }
  static std::string format(const Rational& r) {
    // Exact decimal when the denominator divides a power of ten.
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return boost::multiprecision::numerator(r).str();
    boost::multiprecision::cpp_int d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
      d /= 2;
      ++twos;
    }
    while (d % 5 == 0) {
      d /= 5;
      ++fives;
    }
    if (d != 1) return r.str();
    const int digits = std::max(twos, fives);
    boost::multiprecision::cpp_int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    boost::multiprecision::cpp_int scaled =
        boost::multiprecision::numerator(r) * scale / den;
    std::string s = scaled.str();
    if (static_cast<int>(s.size()) <= digits) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return s;
  }
};

template <>
struct NumericTraits<std::uint64_t> {
  static constexpr QuantaleKind kind = QuantaleKind::natural;
  static constexpr const char* name = "natural";
  static bool valid(std::uint64_t) { return true; }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
      throw Unsupported("natural quantale: sum overflows 64 bits");
    }
    return a + b;
  }
  static std::string format(std::uint64_t v) { return std::to_string(v); }
};

template <typename T>
class ReversedNumericQuantale final : public Quantale {
  using E = Extended<T>;
  using Traits = NumericTraits<T>;

 public:
  ReversedNumericQuantale() : idempotents_{E::infinity(), E(T(0))} {}

  QuantaleKind kind() const override { return Traits::kind; }
  std::string name() const override { return Traits::name; }
  bool contains(const QElem& a) const override {
    const auto* e = std::get_if<E>(&a);
    return e != nullptr && (e->is_infinite() || Traits::valid(e->value()));
  }
  // a <= b in the quantale iff a >= b numerically.
  bool leq(const QElem& a, const QElem& b) const override {
    return numeric_geq(v(a), v(b));
  }
  QElem join(const QElem& a, const QElem& b) const override {
    return numeric_geq(v(a), v(b)) ? b : a;  // numeric min
  }
  QElem meet(const QElem& a, const QElem& b) const override {
    return numeric_geq(v(a), v(b)) ? a : b;  // numeric max
  }
  QElem tensor(const QElem& a, const QElem& b) const override {
    const E& x = v(a);
    const E& y = v(b);
    if (x.is_infinite() || y.is_infinite()) return E::infinity();
    return E(Traits::add(x.value(), y.value()));
  }
  // Largest t (numerically smallest) with t + b >= a.
  QElem residual(const QElem& a, const QElem& b) const override {
    const E& x = v(a);
    const E& y = v(b);
    if (y.is_infinite()) return E(T(0));
    if (x.is_infinite()) return E::infinity();
    if (y.value() >= x.value()) return E(T(0));
    return E(T(x.value() - y.value()));
  }
  QElem unit() const override { return E(T(0)); }
  QElem bottom() const override { return E::infinity(); }
  std::optional<QElem> top() const override { return QElem{E(T(0))}; }
  const std::vector<QElem>& idempotents() const override {
    return idempotents_;
  }
  std::string format(const QElem& a) const override {
    const E& x = v(a);
    return x.is_infinite() ? "inf" : Traits::format(x.value());
  }

 private:
  const E& v(const QElem& a) const {
    require(a);
    return std::get<E>(a);
  }
  static bool numeric_geq(const E& a, const E& b) {
    if (a.is_infinite()) return true;
    if (b.is_infinite()) return false;
    return a.value() >= b.value();
  }

  std::vector<QElem> idempotents_;
};

}  // namespace

QuantalePtr boolean_quantale() {
  static const QuantalePtr q = std::make_shared<BooleanQuantale>();
  return q;
}

QuantalePtr tropical_quantale() {
  static const QuantalePtr q =
      std::make_shared<ReversedNumericQuantale<Rational>>();
  return q;
}

QuantalePtr natural_quantale() {
  static const QuantalePtr q =
      std::make_shared<ReversedNumericQuantale<std::uint64_t>>();
  return q;
}

TropicalValue parse_tropical(std::string_view text) {
  const std::string s(text);
  if (s == "inf") return TropicalValue::infinity();
  auto digits = [](std::string_view part) {
    return !part.empty() && std::all_of(part.begin(), part.end(), [](char c) {
      return c >= '0' && c <= '9';
    });
  };
  // cpp_int's string constructor treats a leading 0 as octal.
  auto decimal = [](std::string_view part) {
    boost::multiprecision::cpp_int v = 0;
    for (char c : part) v = v * 10 + (c - '0');
    return v;
  };
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string_view num(s.data(), slash);
    std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
    if (!digits(num) || !digits(den)) {
      throw InvalidValue("not a tropical number: '" + s + "'");
    }
    const boost::multiprecision::cpp_int d = decimal(den);
    if (d == 0) throw InvalidValue("zero denominator in '" + s + "'");
    return TropicalValue(
        Rational(decimal(num), d));
  }
  const auto dot = s.find('.');
  std::string_view whole(s.data(), dot == std::string::npos ? s.size() : dot);
  std::string_view frac;
  if (dot != std::string::npos) {
    frac = std::string_view(s.data() + dot + 1, s.size() - dot - 1);
    if (!digits(frac)) throw InvalidValue("not a tropical number: '" + s + "'");
  }
  if (!digits(whole)) throw InvalidValue("not a tropical number: '" + s + "'");
  boost::multiprecision::cpp_int scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const boost::multiprecision::cpp_int num = decimal(std::string{whole} + std::string{frac});
  return TropicalValue(Rational(num, scale));
}

// ---------------------------------------------------------------------------
// Finite Heyting lattice; tensor is meet.

HeytingQuantale::HeytingQuantale(HeytingTable table)
    : labels_(std::move(table.elements)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidValue("heyting table has no elements");
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(labels_[i], i).second) {
      throw InvalidValue("duplicate heyting element '" + labels_[i] + "'");
    }
  }
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [lo, hi] : table.order) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      throw InvalidValue("heyting order mentions unknown element '" +
                         (a == index.end() ? lo : hi) + "'");
    }
    leq_[a->second][b->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq_[i][k] && leq_[k][j]) leq_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq_[i][j] && leq_[j][i]) {
        throw InvalidValue("heyting order is not antisymmetric ('" +
                           labels_[i] + "', '" + labels_[j] + "')");
      }

  // Least upper / greatest lower bounds by scanning.
  auto extremum = [&](std::size_t a, std::size_t b, bool upper) {
    auto bound = [&](std::size_t c) {
      return upper ? (leq_[a][c] && leq_[b][c]) : (leq_[c][a] && leq_[c][b]);
    };
    for (std::size_t c = 0; c < n; ++c) {
      if (!bound(c)) continue;
      bool extreme = true;
      for (std::size_t d = 0; d < n && extreme; ++d)
        if (bound(d) && !(upper ? leq_[c][d] : leq_[d][c])) extreme = false;
      if (extreme) return c;
    }
    throw InvalidValue("heyting table is not a lattice: '" + labels_[a] +
                       "' and '" + labels_[b] + "' have no " +
                       (upper ? "join" : "meet"));
  };
  join_.assign(n, std::vector<std::size_t>(n));
  meet_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      join_[a][b] = extremum(a, b, true);
      meet_[a][b] = extremum(a, b, false);
    }
  bottom_ = 0;
  top_ = 0;
  for (std::size_t i = 1; i < n; ++i) {
    bottom_ = meet_[bottom_][i];
    top_ = join_[top_][i];
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet_[a][join_[b][c]] != join_[meet_[a][b]][meet_[a][c]]) {
          throw InvalidValue("heyting table is not distributive");
        }
  implies_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t t = bottom_;
      for (std::size_t c = 0; c < n; ++c)
        if (leq_[meet_[c][b]][a]) t = join_[t][c];
      implies_[a][b] = t;
    }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // Bottom first; any linear extension of the order.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    std::size_t below_a = 0, below_b = 0;
    for (std::size_t c = 0; c < n; ++c) {
      below_a += leq_[c][a];
      below_b += leq_[c][b];
    }
    return below_a < below_b;
  });
  for (auto i : order) idempotents_.push_back(LatticeIndex{i});
}

std::string HeytingQuantale::name() const { return "heyting"; }

std::size_t HeytingQuantale::idx(const QElem& a) const {
  require(a);
  return std::get<LatticeIndex>(a).index;
}

bool HeytingQuantale::contains(const QElem& a) const {
  const auto* e = std::get_if<LatticeIndex>(&a);
  return e != nullptr && e->index < labels_.size();
}

bool HeytingQuantale::leq(const QElem& a, const QElem& b) const {
  return leq_[idx(a)][idx(b)];
}
QElem HeytingQuantale::join(const QElem& a, const QElem& b) const {
  return LatticeIndex{join_[idx(a)][idx(b)]};
}
QElem HeytingQuantale::meet(const QElem& a, const QElem& b) const {
  return LatticeIndex{meet_[idx(a)][idx(b)]};
}
QElem HeytingQuantale::tensor(const QElem& a, const QElem& b) const {
  return meet(a, b);
}
QElem HeytingQuantale::residual(const QElem& a, const QElem& b) const {
  return LatticeIndex{implies_[idx(a)][idx(b)]};
}
QElem HeytingQuantale::unit() const { return LatticeIndex{top_}; }
QElem HeytingQuantale::bottom() const { return LatticeIndex{bottom_}; }
std::optional<QElem> HeytingQuantale::top() const {
  return QElem{LatticeIndex{top_}};
}
const std::vector<QElem>& HeytingQuantale::idempotents() const {
  return idempotents_;
}
std::string HeytingQuantale::format(const QElem& a) const {
  return labels_[idx(a)];
}

bool HeytingQuantale::same_as(const Quantale& other) const {
  const auto* h = dynamic_cast<const HeytingQuantale*>(&other);
  return h != nullptr && h->labels_ == labels_ && h->leq_ == leq_;
}

std::optional<LatticeIndex> HeytingQuantale::find(
    std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return LatticeIndex{i};
  return std::nullopt;
}

QuantalePtr heyting_quantale(HeytingTable table) {
  return std::make_shared<HeytingQuantale>(std::move(table));
}

// ---------------------------------------------------------------------------
// Finite languages under union and concatenation.

LanguageQuantale::LanguageQuantale(std::vector<std::string> alphabet)
    : alphabet_(std::move(alphabet)),
      idempotents_{Language{}, Language{{""}}} {
  std::set<std::string> seen;
  for (const auto& sym : alphabet_) {
    if (sym.size() != 1) {
      throw InvalidValue("language alphabet symbols must be single characters");
    }
    if (!seen.insert(sym).second) {
      throw InvalidValue("duplicate alphabet symbol '" + sym + "'");
    }
  }
}

std::string LanguageQuantale::name() const { return "language"; }

bool LanguageQuantale::contains(const QElem& a) const {
  const auto* l = std::get_if<Language>(&a);
  if (l == nullptr) return false;
  for (const auto& w : l->words)
    for (char c : w)
      if (std::none_of(alphabet_.begin(), alphabet_.end(),
                       [c](const std::string& s) { return s[0] == c; })) {
        return false;
      }
  return true;
}

const Language& LanguageQuantale::lang(const QElem& a) const {
  require(a);
  return std::get<Language>(a);
}

bool LanguageQuantale::leq(const QElem& a, const QElem& b) const {
  const auto& x = lang(a).words;
  const auto& y = lang(b).words;
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}
QElem LanguageQuantale::join(const QElem& a, const QElem& b) const {
  Language out = lang(a);
  const auto& y = lang(b).words;
  out.words.insert(y.begin(), y.end());
  return out;
}
QElem LanguageQuantale::meet(const QElem& a, const QElem& b) const {
  const auto& x = lang(a).words;
  const auto& y = lang(b).words;
  Language out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                        std::inserter(out.words, out.words.end()));
  return out;
}
QElem LanguageQuantale::tensor(const QElem& a, const QElem& b) const {
  Language out;
  for (const auto& u : lang(a).words)
    for (const auto& w : lang(b).words) out.words.insert(u + w);
  return out;
}
QElem LanguageQuantale::residual(const QElem&, const QElem&) const {
  throw Unsupported("language quantale: residuals of finite languages need "
                    "not be finite");
}
QElem LanguageQuantale::unit() const { return Language{{""}}; }
QElem LanguageQuantale::bottom() const { return Language{}; }
const std::vector<QElem>& LanguageQuantale::idempotents() const {
  return idempotents_;
}
std::string LanguageQuantale::format(const QElem& a) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& w : lang(a).words) {
    if (!first) out << ',';
    first = false;
    out << '"' << w << '"';
  }
  out << '}';
  return out.str();
}

bool LanguageQuantale::same_as(const Quantale& other) const {
  const auto* l = dynamic_cast<const LanguageQuantale*>(&other);
  return l != nullptr && l->alphabet_ == alphabet_;
}

QuantalePtr language_quantale(std::vector<std::string> alphabet) {
  return std::make_shared<LanguageQuantale>(std::move(alphabet));
}

}  // namespace quantrel
