#pragma once

// Scalar algebras for quantale-valued relations.
//
// A quantale here is a commutative complete Heyting monoid: a lattice order
// (written leq), finite joins and meets, a monotone associative tensor with a
// unit, and a residual satisfying
//
//     tensor(t, b) <= a   iff   t <= residual(a, b).
//
// Five carriers are provided. Tropical and natural numbers are ordered by
// reversed numeric order, so infinity is the bottom and 0 is both the unit and
// the top.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quantrel {

using Rational = boost::multiprecision::cpp_rational;

/// A value of T extended with a distinguished infinity.
template <typename T>
class Extended {
 public:
  Extended() = default;
  explicit Extended(T value) : value_(std::move(value)) {}

  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  const T& value() const { return value_; }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  bool infinite_ = false;
  T value_{};
};

using TropicalValue = Extended<Rational>;
using NaturalValue = Extended<std::uint64_t>;

/// Element of a finite Heyting lattice, as an index into its label table.
struct LatticeIndex {
  std::size_t index = 0;
  friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

/// A finite set of words.
struct Language {
  std::set<std::string> words;
  friend bool operator==(const Language&, const Language&) = default;
};

using QElem =
    std::variant<bool, TropicalValue, NaturalValue, LatticeIndex, Language>;

enum class QuantaleKind { boolean, tropical, natural, heyting, language };

std::string_view to_string(QuantaleKind kind);

/// Interface shared by all scalar algebras. Instances are immutable and are
/// passed around as QuantalePtr.
class Quantale {
 public:
  virtual ~Quantale() = default;

  virtual QuantaleKind kind() const = 0;
  virtual std::string name() const = 0;

  /// True when `a` is a member of this carrier.
  virtual bool contains(const QElem& a) const = 0;

  virtual bool leq(const QElem& a, const QElem& b) const = 0;
  virtual QElem join(const QElem& a, const QElem& b) const = 0;
  virtual QElem meet(const QElem& a, const QElem& b) const = 0;
  virtual QElem tensor(const QElem& a, const QElem& b) const = 0;

  /// Largest t with tensor(t, b) <= a. Throws Unsupported for carriers where
  /// the result is not finitely representable.
  virtual QElem residual(const QElem& a, const QElem& b) const = 0;

  virtual QElem unit() const = 0;
  virtual QElem bottom() const = 0;
  /// Greatest element, if representable.
  virtual std::optional<QElem> top() const = 0;

  /// Every idempotent below the unit, bottom first.
  virtual const std::vector<QElem>& idempotents() const = 0;

  /// Whether the Kleene closure of a matrix is computable for this carrier.
  virtual bool supports_closure() const { return true; }

  virtual std::string format(const QElem& a) const = 0;

  /// Structural equality of carriers (same kind, same table or alphabet).
  virtual bool same_as(const Quantale& other) const {
    return kind() == other.kind();
  }

  // Derived operations.

  bool equal(const QElem& a, const QElem& b) const;
  QElem join_all(std::span<const QElem> xs) const;
  /// Throws Unsupported for an empty list when there is no top.
  QElem meet_all(std::span<const QElem> xs) const;
  /// Greatest declared idempotent below `a`.
  QElem scalar_interior(const QElem& a) const;
  bool is_idempotent(const QElem& a) const;
  /// Throws DomainMismatch when `a` is not in the carrier.
  void require(const QElem& a) const;
  QElem top_or_throw() const;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

/// Compare two handles by carrier.
bool same_quantale(const QuantalePtr& a, const QuantalePtr& b);

QuantalePtr boolean_quantale();
QuantalePtr tropical_quantale();
QuantalePtr natural_quantale();

/// A finite lattice given by labels and a set of order pairs (lo, hi). The
/// reflexive-transitive closure of the pairs must be a bounded distributive
/// lattice.
struct HeytingTable {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
};

class HeytingQuantale final : public Quantale {
 public:
  explicit HeytingQuantale(HeytingTable table);

  QuantaleKind kind() const override { return QuantaleKind::heyting; }
  std::string name() const override;
  bool contains(const QElem& a) const override;
  bool leq(const QElem& a, const QElem& b) const override;
  QElem join(const QElem& a, const QElem& b) const override;
  QElem meet(const QElem& a, const QElem& b) const override;
  QElem tensor(const QElem& a, const QElem& b) const override;
  QElem residual(const QElem& a, const QElem& b) const override;
  QElem unit() const override;
  QElem bottom() const override;
  std::optional<QElem> top() const override;
  const std::vector<QElem>& idempotents() const override;
  std::string format(const QElem& a) const override;
  bool same_as(const Quantale& other) const override;

  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<LatticeIndex> find(std::string_view label) const;

 private:
  std::size_t idx(const QElem& a) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;  // leq_[i][j]: i <= j
  std::vector<std::vector<std::size_t>> join_;
  std::vector<std::vector<std::size_t>> meet_;
  std::vector<std::vector<std::size_t>> implies_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<QElem> idempotents_;
};

QuantalePtr heyting_quantale(HeytingTable table);

class LanguageQuantale final : public Quantale {
 public:
  /// Each symbol of the alphabet is a single character.
  explicit LanguageQuantale(std::vector<std::string> alphabet);

  QuantaleKind kind() const override { return QuantaleKind::language; }
  std::string name() const override;
  bool contains(const QElem& a) const override;
  bool leq(const QElem& a, const QElem& b) const override;
  QElem join(const QElem& a, const QElem& b) const override;
  QElem meet(const QElem& a, const QElem& b) const override;
  QElem tensor(const QElem& a, const QElem& b) const override;
  QElem residual(const QElem& a, const QElem& b) const override;
  QElem unit() const override;
  QElem bottom() const override;
  std::optional<QElem> top() const override { return std::nullopt; }
  const std::vector<QElem>& idempotents() const override;
  bool supports_closure() const override { return false; }
  std::string format(const QElem& a) const override;
  bool same_as(const Quantale& other) const override;

  const std::vector<std::string>& alphabet() const { return alphabet_; }

 private:
  const Language& lang(const QElem& a) const;

  std::vector<std::string> alphabet_;
  std::vector<QElem> idempotents_;
};

QuantalePtr language_quantale(std::vector<std::string> alphabet);

// Scalar constructors.

inline QElem tropical(std::int64_t v) { return TropicalValue(Rational(v)); }
inline QElem tropical(Rational v) { return TropicalValue(std::move(v)); }
inline QElem tropical_inf() { return TropicalValue::infinity(); }
inline QElem natural(std::uint64_t v) { return NaturalValue(v); }
inline QElem natural_inf() { return NaturalValue::infinity(); }

/// Parses "inf", an integer, a decimal such as "2.5", or a fraction "7/3"
/// into an exact nonnegative rational. Throws InvalidValue otherwise.
TropicalValue parse_tropical(std::string_view text);

}  // namespace quantrel
