#pragma once

// Biproducts of finite types and block matrices over them.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "quantrel/relmat.hpp"

namespace quantrel {

/// Disjoint union of component types with its injections and projections.
/// Labels of the total type are "<component>.<label>".
class SumType {
 public:
  const std::vector<FinType>& components() const { return components_; }
  const FinType& total() const { return total_; }
  const QuantalePtr& quantale() const { return q_; }
  std::size_t size() const { return components_.size(); }

  /// component i -> total
  const Mat& injection(std::size_t i) const { return injections_.at(i); }
  /// total -> component i
  const Mat& projection(std::size_t i) const { return projections_.at(i); }

 private:
  friend SumType make_sum(std::vector<FinType>, const QuantalePtr&,
                          std::string);
  SumType(std::vector<FinType> components, FinType total, QuantalePtr q,
          std::vector<Mat> injections, std::vector<Mat> projections);

  std::vector<FinType> components_;
  FinType total_;
  QuantalePtr q_;
  std::vector<Mat> injections_;
  std::vector<Mat> projections_;
};

/// An empty component list yields the null type with no labels. The total is
/// named `name`, or the component names joined with '+' when it is empty.
SumType make_sum(std::vector<FinType> components, const QuantalePtr& q,
                 std::string name = {});

/// Source pairing: terms[i]: component i -> T. Returns the unique m: total -> T
/// with compose(injection(i), m) = terms[i].
Mat copair(const SumType& sum, std::span<const Mat> terms);
/// Target pairing: terms[i]: T -> component i. Returns the unique m: T -> total
/// with compose(m, projection(i)) = terms[i].
Mat pair(const SumType& sum, std::span<const Mat> terms);

/// Block-diagonal superposition: terms[i]: src component i -> dst component i.
Mat term_sum(const SumType& src, const SumType& dst, std::span<const Mat> terms);
Mat term_sum(const SumType& src, const SumType& dst, const Mat& s, const Mat& r);

struct BlockMat {
  SumType rows;
  SumType cols;
  std::vector<Mat> blocks;  // row-major, rows.size() x cols.size()

  const Mat& at(std::size_t i, std::size_t j) const {
    return blocks.at(i * cols.size() + j);
  }
};

/// Decompose r: rows.total -> cols.total into blocks injection;r;projection.
BlockMat partition(const Mat& r, const SumType& rows, const SumType& cols);
/// Reassemble a block matrix into one term over the totals.
Mat sum_flatten(const BlockMat& b);
/// Block product: entry (i,k) is the join over j of b(i,j);c(j,k).
BlockMat compose_blocks(const BlockMat& b, const BlockMat& c);

}  // namespace quantrel
