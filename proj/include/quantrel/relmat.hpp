#pragma once

// Typed quantale-valued matrices.
//
// A Mat with src Y and dst X is a |Y| x |X| grid of scalars, read as a
// weighted relation from Y to X. compose(s, r) runs s first and then r:
//
//     compose(s, r)[z][x] = join_y tensor(s[z][y], r[y][x]).
//
// Objects (states, predicates as vectors) are 1 x X matrices whose source is
// the one-element type returned by FinType::unit().

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quantrel/quantale.hpp"

namespace quantrel {

/// A named finite set of distinct state labels in a fixed order.
class FinType {
 public:
  FinType();  // the empty type named "0"
  FinType(std::string name, std::vector<std::string> labels);

  /// The one-element separator type "1".
  static FinType unit();

  const std::string& name() const { return data_->name; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::size_t size() const { return data_->labels.size(); }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const FinType& a, const FinType& b);

 private:
  struct Data {
    std::string name;
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Data> data_;
};

class Mat {
 public:
  /// All-bottom matrix.
  Mat(FinType src, FinType dst, QuantalePtr q);
  /// Row-major entries; throws TypeMismatch on a size mismatch and
  /// DomainMismatch on a foreign scalar.
  Mat(FinType src, FinType dst, QuantalePtr q, std::vector<QElem> entries);

  const FinType& src() const { return src_; }
  const FinType& dst() const { return dst_; }
  const QuantalePtr& quantale() const { return q_; }
  const Quantale& q() const { return *q_; }
  std::size_t rows() const { return src_.size(); }
  std::size_t cols() const { return dst_.size(); }
  bool is_square() const { return src_ == dst_; }

  const QElem& at(std::size_t y, std::size_t x) const {
    return entries_[y * cols() + x];
  }
  /// Copy with one entry replaced.
  Mat with(std::size_t y, std::size_t x, QElem value) const;
  const std::vector<QElem>& entries() const { return entries_; }

  friend bool operator==(const Mat& a, const Mat& b);

 private:
  FinType src_;
  FinType dst_;
  QuantalePtr q_;
  std::vector<QElem> entries_;
};

Mat identity(const FinType& t, const QuantalePtr& q);
Mat mzero(const FinType& src, const FinType& dst, const QuantalePtr& q);
/// Throws Unsupported when the quantale has no finite top.
Mat mtop(const FinType& src, const FinType& dst, const QuantalePtr& q);

/// Join-of-tensors product; s.dst must equal r.src.
Mat compose(const Mat& s, const Mat& r);

Mat mjoin(const Mat& s, const Mat& r);
Mat mmeet(const Mat& s, const Mat& r);
bool mleq(const Mat& s, const Mat& r);

/// s: Z->X, r: Y->X. The largest t: Z->Y with compose(t, r) <= s.
Mat residual_right(const Mat& s, const Mat& r);
/// r: Y->X, t: Y->Z. The largest s: X->Z with compose(r, s) <= t.
Mat residual_left(const Mat& r, const Mat& t);

Mat transpose(const Mat& r);

/// Unit inequality identity(Y) <= r;s and counit inequality s;r <= identity(X)
/// for r: Y->X, s: X->Y.
bool is_adjoint_pair(const Mat& r, const Mat& s);

enum class Functionality { none, functional, coreflective, reflective, inversion };

/// A term is functional when its transpose is a right adjoint.
bool is_functional(const Mat& r);
/// Refines is_functional: coreflective when the unit holds with equality,
/// reflective when the counit does, inversion when both do.
Functionality classify(const Mat& r);

/// r: Y->X, q: Y->Y. Returns r |> (q;r) : X->X.
Mat heyting_direct_image(const Mat& r, const Mat& q);
/// r: Y->X, p: X->X. Returns (r;p) <| r : Y->Y.
Mat heyting_inverse_image(const Mat& r, const Mat& p);

/// phi: 1->Y. Returns phi;r : 1->X.
Mat obj_direct(const Mat& phi, const Mat& r);
/// psi: 1->X. Returns psi <| r : 1->Y.
Mat obj_inverse(const Mat& psi, const Mat& r);

/// Row vector over `t` built from one scalar per label.
Mat object(const FinType& t, const QuantalePtr& q, std::vector<QElem> values);

/// Throws TypeMismatch unless the two matrices are parallel over the same
/// quantale.
void require_parallel(const Mat& s, const Mat& r, std::string_view op);
void require_same_quantale(const QuantalePtr& a, const QuantalePtr& b,
                           std::string_view op);

}  // namespace quantrel
