#include "quantrel/sums.hpp"

#include "quantrel/error.hpp"

namespace quantrel {

SumType::SumType(std::vector<FinType> components, FinType total, QuantalePtr q,
                 std::vector<Mat> injections, std::vector<Mat> projections)
    : components_(std::move(components)),
      total_(std::move(total)),
      q_(std::move(q)),
      injections_(std::move(injections)),
      projections_(std::move(projections)) {}

SumType make_sum(std::vector<FinType> components, const QuantalePtr& q,
                 std::string name) {
  std::vector<std::string> labels;
  if (name.empty()) {
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i > 0) name += '+';
      name += components[i].name();
    }
    if (components.empty()) name = "0";
  }
  for (const auto& c : components)
    for (const auto& l : c.labels()) labels.push_back(c.name() + "." + l);
  FinType total(name, std::move(labels));

  std::vector<Mat> inj;
  std::vector<Mat> proj;
  std::size_t offset = 0;
  for (const auto& c : components) {
    std::vector<QElem> e(c.size() * total.size(), q->bottom());
    for (std::size_t i = 0; i < c.size(); ++i)
      e[i * total.size() + offset + i] = q->unit();
    Mat iota(c, total, q, std::move(e));
    proj.push_back(transpose(iota));
    inj.push_back(std::move(iota));
    offset += c.size();
  }
  return SumType(std::move(components), std::move(total), q, std::move(inj),
                 std::move(proj));
}

namespace {

void require_arity(const SumType& sum, std::size_t n, std::string_view op) {
  if (n != sum.size()) {
    throw TypeMismatch(std::string(op) + ": expected " +
                       std::to_string(sum.size()) + " terms, got " +
                       std::to_string(n));
  }
}

}  // namespace

Mat copair(const SumType& sum, std::span<const Mat> terms) {
  require_arity(sum, terms.size(), "copair");
  if (terms.empty()) {
    throw TypeMismatch("copair: cannot infer the target of an empty pairing");
  }
  const FinType& target = terms.front().dst();
  Mat acc = mzero(sum.total(), target, sum.quantale());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!(terms[i].src() == sum.components()[i]) ||
        !(terms[i].dst() == target)) {
      throw TypeMismatch("copair: term " + std::to_string(i) +
                         " does not map component '" +
                         sum.components()[i].name() + "' to '" +
                         target.name() + "'");
    }
    acc = mjoin(acc, compose(sum.projection(i), terms[i]));
  }
  return acc;
}

Mat pair(const SumType& sum, std::span<const Mat> terms) {
  require_arity(sum, terms.size(), "pair");
  if (terms.empty()) {
    throw TypeMismatch("pair: cannot infer the source of an empty pairing");
  }
  const FinType& source = terms.front().src();
  Mat acc = mzero(source, sum.total(), sum.quantale());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!(terms[i].dst() == sum.components()[i]) ||
        !(terms[i].src() == source)) {
      throw TypeMismatch("pair: term " + std::to_string(i) + " does not map '" +
                         source.name() + "' to component '" +
                         sum.components()[i].name() + "'");
    }
    acc = mjoin(acc, compose(terms[i], sum.injection(i)));
  }
  return acc;
}

Mat term_sum(const SumType& src, const SumType& dst,
             std::span<const Mat> terms) {
  require_arity(src, terms.size(), "term_sum");
  require_arity(dst, terms.size(), "term_sum");
  Mat acc = mzero(src.total(), dst.total(), src.quantale());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    acc = mjoin(acc, compose(compose(src.projection(i), terms[i]),
                             dst.injection(i)));
  }
  return acc;
}

Mat term_sum(const SumType& src, const SumType& dst, const Mat& s,
             const Mat& r) {
  const std::vector<Mat> terms{s, r};
  return term_sum(src, dst, terms);
}

BlockMat partition(const Mat& r, const SumType& rows, const SumType& cols) {
  if (!(r.src() == rows.total()) || !(r.dst() == cols.total())) {
    throw TypeMismatch("partition: matrix " + r.src().name() + "->" +
                       r.dst().name() + " is not over " + rows.total().name() +
                       "->" + cols.total().name());
  }
  BlockMat b{rows, cols, {}};
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      b.blocks.push_back(
          compose(compose(rows.injection(i), r), cols.projection(j)));
  return b;
}

Mat sum_flatten(const BlockMat& b) {
  if (b.blocks.size() != b.rows.size() * b.cols.size()) {
    throw TypeMismatch("sum_flatten: block grid has the wrong size");
  }
  Mat acc = mzero(b.rows.total(), b.cols.total(), b.rows.quantale());
  for (std::size_t i = 0; i < b.rows.size(); ++i)
    for (std::size_t j = 0; j < b.cols.size(); ++j)
      acc = mjoin(acc, compose(compose(b.rows.projection(i), b.at(i, j)),
                               b.cols.injection(j)));
  return acc;
}

BlockMat compose_blocks(const BlockMat& b, const BlockMat& c) {
  if (!(b.cols.total() == c.rows.total())) {
    throw TypeMismatch("compose_blocks: inner sums differ");
  }
  BlockMat out{b.rows, c.cols, {}};
  for (std::size_t i = 0; i < b.rows.size(); ++i)
    for (std::size_t k = 0; k < c.cols.size(); ++k) {
      Mat acc = mzero(b.rows.components()[i], c.cols.components()[k],
                      b.rows.quantale());
      for (std::size_t j = 0; j < b.cols.size(); ++j)
        acc = mjoin(acc, compose(b.at(i, j), c.at(j, k)));
      out.blocks.push_back(std::move(acc));
    }
  return out;
}

}  // namespace quantrel
