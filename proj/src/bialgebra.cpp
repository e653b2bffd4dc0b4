#include "nichols/bialgebra.hpp"

#include <string>

namespace nichols {

namespace {

std::size_t component_offset(std::size_t d) { return (d - 2) * (d - 1) / 2; }

template <FieldScalar T>
Matrix<T> stack(const Matrix<T>& top, std::size_t top_rows, const Matrix<T>& bottom) {
  Matrix<T> out(top.field(), top_rows + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top_rows; ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    for (std::size_t j = 0; j < bottom.cols(); ++j) out(top_rows + i, j) = bottom(i, j);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------- CoproductTable

template <FieldScalar T>
CoproductTable<T>::CoproductTable(BraidedSpace<T> space, std::size_t max_degree)
    : space_(std::move(space)), max_degree_(max_degree) {
  if (max_degree_ < 1) throw DegreeCap("degree cutoff must be at least 1");
  tensor_dimension(space_.dimension(), max_degree_);
  for (std::size_t d = 2; d <= max_degree_; ++d) {
    for (std::size_t i = 1; i < d; ++i) components_.push_back(delta_component(space_, i, d - i).matrix);
  }
}

template <FieldScalar T>
const Matrix<T>& CoproductTable<T>::component(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i + j > max_degree_) {
    throw IndexOutOfRange("no stored coproduct component (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  return components_[component_offset(i + j) + (i - 1)];
}

// ---------------------------------------------------------- GradedQuotient

template <FieldScalar T>
GradedQuotient<T>::GradedQuotient(std::shared_ptr<const CoproductTable<T>> coproduct,
                                  std::vector<Subspace<T>> relations)
    : coproduct_(std::move(coproduct)), relations_(std::move(relations)) {
  if (relations_.size() != coproduct_->max_degree()) {
    throw DimensionMismatch("relation list length differs from the coproduct cutoff");
  }
  const std::size_t n = dimension();
  for (std::size_t d = 1; d <= relations_.size(); ++d) {
    const Subspace<T>& r = relations_[d - 1];
    if (r.ambient_dim() != tensor_dimension(n, d)) {
      throw AmbientMismatch("relations of degree " + std::to_string(d) + " do not live in V^(x)" + std::to_string(d));
    }
    if (r.field() != field()) throw FieldMismatch("relations over a different field than the braiding");
  }
}

template <FieldScalar T>
const Subspace<T>& GradedQuotient<T>::relations(std::size_t d) const {
  if (d < 1 || d > cutoff()) throw DegreeCap("degree " + std::to_string(d) + " outside 1.." + std::to_string(cutoff()));
  return relations_[d - 1];
}

template <FieldScalar T>
std::vector<std::size_t> GradedQuotient<T>::hilbert_series() const {
  std::vector<std::size_t> out{1};
  for (const Subspace<T>& r : relations_) out.push_back(r.ambient_dim() - r.dim());
  return out;
}

template <FieldScalar T>
std::size_t GradedQuotient<T>::total_dimension() const {
  std::size_t total = 0;
  for (std::size_t h : hilbert_series()) total += h;
  return total;
}

template <FieldScalar T>
std::size_t GradedQuotient<T>::degree_offset(std::size_t d) const {
  if (d > cutoff()) throw DegreeCap("degree " + std::to_string(d) + " beyond the cutoff");
  const auto h = hilbert_series();
  std::size_t offset = 0;
  for (std::size_t e = 0; e < d; ++e) offset += h[e];
  return offset;
}

template <FieldScalar T>
std::vector<T> GradedQuotient<T>::to_quotient(std::size_t d, std::span<const T> v) const {
  if (d == 0) {
    if (v.size() != 1) throw AmbientMismatch("degree-0 vectors have one coordinate");
    return {v.begin(), v.end()};
  }
  const Subspace<T>& r = relations(d);
  const std::vector<T> nf = r.normal_form(v);
  std::vector<T> out;
  for (std::size_t j : r.complement_coordinates()) out.push_back(nf[j]);
  return out;
}

template <FieldScalar T>
std::vector<T> GradedQuotient<T>::from_quotient(std::size_t d, std::span<const T> coords) const {
  if (d == 0) {
    if (coords.size() != 1) throw AmbientMismatch("degree-0 vectors have one coordinate");
    return {coords.begin(), coords.end()};
  }
  const Subspace<T>& r = relations(d);
  const auto free_coords = r.complement_coordinates();
  if (coords.size() != free_coords.size()) throw AmbientMismatch("wrong number of quotient coordinates");
  std::vector<T> out = zero_vector<T>(field(), r.ambient_dim());
  for (std::size_t k = 0; k < free_coords.size(); ++k) out[free_coords[k]] = coords[k];
  return out;
}

// --------------------------------------------------------------- functions

template <FieldScalar T>
Subspace<T> mixed_relations(const GradedQuotient<T>& s, std::size_t d, std::size_t i) {
  if (i == 0 || i >= d || d > s.cutoff()) {
    throw IndexOutOfRange("mixed degree (" + std::to_string(i) + ", " + std::to_string(d - i) + ") out of range");
  }
  const std::size_t n = s.dimension();
  const Subspace<T> left = s.relations(i).tensor_with_identity(1, tensor_dimension(n, d - i));
  const Subspace<T> right = s.relations(d - i).tensor_with_identity(tensor_dimension(n, i), 1);
  return sum(left, right);
}

template <FieldScalar T>
GradedQuotient<T> free_truncated(const BraidedSpace<T>& space, std::size_t cutoff) {
  if (cutoff < 1 || cutoff > kMaxDegree) {
    throw DegreeCap("degree cutoff " + std::to_string(cutoff) + " outside 1.." + std::to_string(kMaxDegree));
  }
  auto table = std::make_shared<const CoproductTable<T>>(space, cutoff);
  std::vector<Subspace<T>> relations;
  for (std::size_t d = 1; d <= cutoff; ++d) {
    relations.push_back(Subspace<T>::zero(space.field(), tensor_dimension(space.dimension(), d)));
  }
  return GradedQuotient<T>(std::move(table), std::move(relations));
}

template <FieldScalar T>
GradedQuotient<T> ideal_saturate(const GradedQuotient<T>& s,
                                 const std::vector<std::pair<std::size_t, Subspace<T>>>& new_relations) {
  if (new_relations.empty()) return s;
  const std::size_t n = s.dimension();
  std::vector<Subspace<T>> rel = s.all_relations();
  for (const auto& [d, sub] : new_relations) {
    if (d < 1 || d > s.cutoff()) throw DegreeCap("relation degree " + std::to_string(d) + " outside the cutoff");
    if (sub.ambient_dim() != rel[d - 1].ambient_dim()) {
      throw AmbientMismatch("degree-" + std::to_string(d) + " relations must live in V^(x)" + std::to_string(d));
    }
    rel[d - 1] = sum(rel[d - 1], sub);
  }
  // One ascending pass reaches the fixpoint: R_d is final before it feeds R_{d+1}.
  for (std::size_t d = 1; d < s.cutoff(); ++d) {
    const Subspace<T>& r = rel[d - 1];
    if (r.is_zero()) continue;
    rel[d] = sum(rel[d], sum(r.tensor_with_identity(n, 1), r.tensor_with_identity(1, n)));
  }
  GradedQuotient<T> out(s.coproduct_ptr(), std::move(rel));
  verify_invariants(out);
  return out;
}

template <FieldScalar T>
PrimitiveReport<T> primitives(const GradedQuotient<T>& s, std::size_t d) {
  if (d < 1 || d > s.cutoff()) throw DegreeCap("degree " + std::to_string(d) + " outside 1.." + std::to_string(s.cutoff()));
  const std::size_t total = tensor_dimension(s.dimension(), d);
  const Subspace<T>& r = s.relations(d);
  if (d == 1) {
    const Matrix<T> reps = r.normal_form_rows(Matrix<T>::identity(s.field(), total));
    return {d, Subspace<T>::span(reps)};
  }
  // Row w of the constraint block is the class of Delta_{i,d-i}(e_w) in the
  // quotient; x is primitive iff x^T annihilates every block.
  Matrix<T> constraints(s.field(), 0, total);
  std::size_t rank = 0;
  for (std::size_t i = 1; i < d; ++i) {
    const Subspace<T> q = mixed_relations(s, d, i);
    const Matrix<T> images = q.normal_form_rows(s.coproduct().component(i, d - i).transpose());
    RowEchelon<T> e = rref(stack(constraints, rank, images.transpose()));
    rank = e.rank();
    constraints = std::move(e.reduced);
  }
  const Subspace<T> kernel = kernel_basis(constraints.row_block(0, rank));
  if (kernel.is_zero()) return {d, kernel};
  return {d, Subspace<T>::span(r.normal_form_rows(kernel.basis()))};
}

template <FieldScalar T>
bool is_ideal_closed(const GradedQuotient<T>& s) {
  const std::size_t n = s.dimension();
  for (std::size_t d = 1; d < s.cutoff(); ++d) {
    const Subspace<T>& r = s.relations(d);
    if (r.is_zero()) continue;
    const Subspace<T>& next = s.relations(d + 1);
    if (!next.contains(r.tensor_with_identity(n, 1)) || !next.contains(r.tensor_with_identity(1, n))) return false;
  }
  return true;
}

template <FieldScalar T>
bool is_coideal(const GradedQuotient<T>& s) {
  for (std::size_t d = 2; d <= s.cutoff(); ++d) {
    const Subspace<T>& r = s.relations(d);
    if (r.is_zero()) continue;
    for (std::size_t i = 1; i < d; ++i) {
      const Matrix<T> images = r.basis() * s.coproduct().component(i, d - i).transpose();
      if (!mixed_relations(s, d, i).normal_form_rows(images).is_zero()) return false;
    }
  }
  return true;
}

template <FieldScalar T>
void verify_invariants(const GradedQuotient<T>& s) {
  if (!is_ideal_closed(s)) throw InvariantViolation("relations are not closed under V (x) - and - (x) V");
  if (!is_coideal(s)) throw InvariantViolation("relations do not span a coideal; the quotient is not a bialgebra");
}

template <FieldScalar T>
Matrix<T> omega_projection(const GradedQuotient<T>& s) {
  const std::size_t n = s.dimension();
  const std::size_t offset = s.degree_offset(1);
  const Subspace<T>& r = s.relations(1);
  Matrix<T> out(s.field(), n, s.total_dimension());
  const auto coords = r.complement_coordinates();
  const T one(s.field(), 1);
  for (std::size_t k = 0; k < coords.size(); ++k) out(coords[k], offset + k) = one;
  return out;
}

template <FieldScalar T>
Matrix<T> degree_one_inclusion(const GradedQuotient<T>& s) {
  const std::size_t n = s.dimension();
  const std::size_t offset = s.degree_offset(1);
  Matrix<T> out(s.field(), s.total_dimension(), n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::vector<T> e = unit_vector<T>(s.field(), n, v);
    const std::vector<T> coords = s.to_quotient(1, e);
    for (std::size_t k = 0; k < coords.size(); ++k) out(offset + k, v) = coords[k];
  }
  return out;
}

template <FieldScalar T>
Matrix<T> counit(const GradedQuotient<T>& s) {
  Matrix<T> out(s.field(), 1, s.total_dimension());
  out(0, 0) = T(s.field(), 1);
  return out;
}

template <FieldScalar T>
Matrix<T> unit(const GradedQuotient<T>& s) {
  Matrix<T> out(s.field(), s.total_dimension(), 1);
  out(0, 0) = T(s.field(), 1);
  return out;
}

template <FieldScalar T>
AugmentationSplit<T> augmentation_split(const GradedQuotient<T>& s) {
  const std::size_t total = s.total_dimension();
  const std::size_t positive = total - 1;
  Matrix<T> zeta(s.field(), total, positive);
  Matrix<T> tau(s.field(), positive, total);
  const T one(s.field(), 1);
  for (std::size_t k = 0; k < positive; ++k) {
    zeta(k + 1, k) = one;
    tau(k, k + 1) = one;
  }
  return {std::move(zeta), std::move(tau)};
}

#define NICHOLS_BIALGEBRA_INSTANTIATE(T)                                                                   \
  template class CoproductTable<T>;                                                                        \
  template class GradedQuotient<T>;                                                                        \
  template Subspace<T> mixed_relations(const GradedQuotient<T>&, std::size_t, std::size_t);                \
  template GradedQuotient<T> free_truncated(const BraidedSpace<T>&, std::size_t);                          \
  template GradedQuotient<T> ideal_saturate(const GradedQuotient<T>&,                                      \
                                            const std::vector<std::pair<std::size_t, Subspace<T>>>&);      \
  template PrimitiveReport<T> primitives(const GradedQuotient<T>&, std::size_t);                           \
  template bool is_ideal_closed(const GradedQuotient<T>&);                                                 \
  template bool is_coideal(const GradedQuotient<T>&);                                                      \
  template void verify_invariants(const GradedQuotient<T>&);                                               \
  template Matrix<T> omega_projection(const GradedQuotient<T>&);                                           \
  template Matrix<T> degree_one_inclusion(const GradedQuotient<T>&);                                       \
  template Matrix<T> counit(const GradedQuotient<T>&);                                                     \
  template Matrix<T> unit(const GradedQuotient<T>&);                                                       \
  template AugmentationSplit<T> augmentation_split(const GradedQuotient<T>&);

NICHOLS_BIALGEBRA_INSTANTIATE(Rational)
NICHOLS_BIALGEBRA_INSTANTIATE(ModP)

}  // namespace nichols
