#include "nichols/tower.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace nichols {

namespace {

constexpr std::size_t kMonadEnvelope = 4096;

// Coordinates of v in the reduced basis of s, read off at the pivots.
// Returns nullopt when v is not in s.
template <FieldScalar T>
std::optional<std::vector<T>> coordinates_in(const Subspace<T>& s, std::span<const T> v) {
  std::vector<T> coords;
  coords.reserve(s.dim());
  for (std::size_t p : s.pivots()) coords.push_back(v[p]);
  std::vector<T> rebuilt = zero_vector<T>(s.field(), s.ambient_dim());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (coords[k].is_zero()) continue;
    auto row = s.basis_vector(k);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) rebuilt[j].add_mul(coords[k], row[j]);
    }
  }
  if (!std::equal(rebuilt.begin(), rebuilt.end(), v.begin(), v.end())) return std::nullopt;
  return coords;
}

template <FieldScalar T>
std::vector<T> kron_all(const FieldSpec& field, const std::vector<const std::vector<T>*>& factors) {
  std::vector<T> out{T(field, 1)};
  for (const auto* f : factors) out = kron<T>(out, *f);
  return out;
}

}  // namespace

template <FieldScalar T>
StepResult<T> step(const GradedQuotient<T>& s, std::size_t index) {
  StageReport report;
  report.index = index;
  report.hilbert = s.hilbert_series();
  std::vector<std::pair<std::size_t, Subspace<T>>> found;
  for (std::size_t d = 2; d <= s.cutoff(); ++d) {
    PrimitiveReport<T> p = primitives(s, d);
    report.new_relation_dims.push_back(p.representatives.dim());
    if (!p.representatives.is_zero()) found.emplace_back(d, std::move(p.representatives));
  }
  report.iso = found.empty();
  if (report.iso) return {s, std::move(report)};
  return {ideal_saturate(s, found), std::move(report)};
}

template <FieldScalar T>
RankReport<T> run(const BraidedSpace<T>& space, std::size_t cutoff, std::size_t max_iter, StageCache<T>* cache) {
  GradedQuotient<T> current = free_truncated(space, cutoff);
  RankReport<T> out{{}, std::nullopt, false, current, {current}, std::nullopt};
  for (std::size_t k = 0; k < max_iter; ++k) {
    std::optional<CachedStep<T>> hit;
    if (cache != nullptr) hit = cache->load(k);
    if (hit && (hit->report.index != k || hit->report.hilbert != current.hilbert_series())) hit.reset();

    StageReport report;
    std::optional<GradedQuotient<T>> next;
    if (hit) {
      report = std::move(hit->report);
      next.emplace(current.coproduct_ptr(), std::move(hit->next_relations));
    } else {
      StepResult<T> res = step(current, k);
      report = std::move(res.report);
      next.emplace(std::move(res.next));
      if (cache != nullptr) cache->store(k, {report, next->all_relations()});
    }
    const bool iso = report.iso;
    out.stages.push_back(std::move(report));
    if (iso) {
      out.rank_le_cutoff = k;
      out.stabilized = true;
      break;
    }
    current = std::move(*next);
    out.quotients.push_back(current);
  }
  out.final = current;
  return out;
}

bool stage_reports_consistent(const std::vector<StageReport>& stages) {
  bool seen_iso = false;
  for (const StageReport& r : stages) {
    const bool none = std::all_of(r.new_relation_dims.begin(), r.new_relation_dims.end(),
                                  [](std::size_t x) { return x == 0; });
    if (r.iso != none) return false;
    if (seen_iso && !r.iso) return false;
    seen_iso = seen_iso || r.iso;
  }
  return true;
}

template <FieldScalar T>
PrimitiveSpace<T> primitive_space(const GradedQuotient<T>& s) {
  const FieldSpec& field = s.field();
  const std::size_t n = s.dimension();
  std::vector<std::size_t> dims;
  std::vector<Subspace<T>> pieces;
  std::size_t w = 0;
  for (std::size_t d = 1; d <= s.cutoff(); ++d) {
    const Subspace<T> reps = primitives(s, d).representatives;
    const std::size_t h = s.hilbert_series()[d];
    std::vector<std::vector<T>> coords;
    for (std::size_t k = 0; k < reps.dim(); ++k) coords.push_back(s.to_quotient(d, reps.basis_vector(k)));
    pieces.push_back(Subspace<T>::span(field, h, coords));
    dims.push_back(pieces.back().dim());
    w += dims.back();
  }

  PrimitiveSpace<T> out{dims, Matrix<T>(field, s.total_dimension(), w), Matrix<T>(field, n, w),
                        Matrix<T>(field, w, n)};
  std::size_t column = 0;
  for (std::size_t d = 1; d <= s.cutoff(); ++d) {
    const Subspace<T>& piece = pieces[d - 1];
    const std::size_t offset = s.degree_offset(d);
    for (std::size_t k = 0; k < piece.dim(); ++k, ++column) {
      auto row = piece.basis_vector(k);
      for (std::size_t j = 0; j < row.size(); ++j) out.inclusion(offset + j, column) = row[j];
    }
  }
  out.gamma = omega_projection(s) * out.inclusion;
  // Degree-one primitives come first in the basis.
  const Subspace<T>& first = pieces.front();
  for (std::size_t v = 0; v < n; ++v) {
    const std::vector<T> e = unit_vector<T>(field, n, v);
    const std::vector<T> q = s.to_quotient(1, e);
    auto coords = coordinates_in(first, std::span<const T>(q));
    if (!coords) throw InvariantViolation("a degree-one class is not primitive");
    for (std::size_t k = 0; k < coords->size(); ++k) out.eta(k, v) = (*coords)[k];
  }
  return out;
}

template <FieldScalar T>
bool gamma_retraction_check(const GradedQuotient<T>& s) {
  const PrimitiveSpace<T> p = primitive_space(s);
  return p.gamma * p.eta == Matrix<T>::identity(s.field(), s.dimension());
}

template <FieldScalar T>
bool idempotent_check(const GradedQuotient<T>& s) {
  const PrimitiveSpace<T> p = primitive_space(s);
  const Matrix<T> e = p.eta * p.gamma;
  return e * e == e;
}

template <FieldScalar T>
bool em_unit_check(const BraidedSpace<T>& space, std::size_t cutoff, const Matrix<T>& action) {
  const PrimitiveSpace<T> p = primitive_space(free_truncated(space, cutoff));
  if (action.rows() != space.dimension() || action.cols() != p.dim()) {
    throw DimensionMismatch("action must be " + std::to_string(space.dimension()) + "x" + std::to_string(p.dim()));
  }
  if (action.field() != space.field()) throw FieldMismatch("action over a different field than the braiding");
  return action * p.eta == Matrix<T>::identity(space.field(), space.dimension());
}

template <FieldScalar T>
MonadLayers<T> monad_layers(const BraidedSpace<T>& space, std::size_t outer_cutoff, std::size_t inner_cutoff) {
  const FieldSpec& field = space.field();
  const std::size_t n = space.dimension();
  if (outer_cutoff < 1 || outer_cutoff > inner_cutoff) {
    throw DegreeCap("outer cutoff must lie in 1..inner cutoff");
  }
  if (tensor_dimension(n, inner_cutoff) > kMonadEnvelope) {
    throw EnvelopeExceeded("V^(x)" + std::to_string(inner_cutoff) + " is beyond the monad check envelope");
  }

  // Inner layer: W = primitives of T(V) up to V-degree inner_cutoff.
  const GradedQuotient<T> free_v = free_truncated(space, inner_cutoff);
  std::vector<Subspace<T>> p_v;
  std::vector<std::size_t> first_of_degree(inner_cutoff + 2, 0);
  MonadLayers<T> out{{}, {}, Matrix<T>(field, 0, 0), {}, {}, Matrix<T>(field, 0, 0), Matrix<T>(field, 0, 0),
                     Matrix<T>(field, 0, 0), Matrix<T>(field, 0, 0), Matrix<T>(field, 0, 0)};
  for (std::size_t d = 1; d <= inner_cutoff; ++d) {
    p_v.push_back(primitives(free_v, d).representatives);
    first_of_degree[d] = out.w_basis.size();
    for (std::size_t k = 0; k < p_v.back().dim(); ++k) {
      auto row = p_v.back().basis_vector(k);
      out.w_basis.emplace_back(row.begin(), row.end());
      out.w_degrees.push_back(d);
    }
  }
  first_of_degree[inner_cutoff + 1] = out.w_basis.size();
  const std::size_t w = out.w_basis.size();
  if (w > kMaxDimension) throw EnvelopeExceeded("primitive space of dimension " + std::to_string(w) + " is too large");
  if (tensor_dimension(w, outer_cutoff) > kMonadEnvelope) {
    throw EnvelopeExceeded("W^(x)" + std::to_string(outer_cutoff) + " is beyond the monad check envelope");
  }

  // Coordinates of a primitive of T(V) in the W basis.
  auto w_coordinates = [&](std::size_t d, std::span<const T> v) -> std::vector<T> {
    std::vector<T> col = zero_vector<T>(field, w);
    if (d < 1 || d > inner_cutoff) throw InvariantViolation("image outside the inner truncation");
    auto coords = coordinates_in(p_v[d - 1], v);
    if (!coords) throw InvariantViolation("image in degree " + std::to_string(d) + " is not primitive");
    for (std::size_t k = 0; k < coords->size(); ++k) col[first_of_degree[d] + k] = (*coords)[k];
    return col;
  };

  // Braiding of T(V) restricted to W (x) W.
  out.w_braiding = Matrix<T>(field, w * w, w * w);
  std::map<std::pair<std::size_t, std::size_t>, Matrix<T>> blocks;
  for (std::size_t k = 0; k < w; ++k) {
    for (std::size_t l = 0; l < w; ++l) {
      const std::size_t a = out.w_degrees[k];
      const std::size_t b = out.w_degrees[l];
      if (a + b > kMaxDegree) throw EnvelopeExceeded("braiding block beyond the degree cap");
      auto it = blocks.find({a, b});
      if (it == blocks.end()) it = blocks.emplace(std::make_pair(a, b), block_braiding(space, a, b)).first;
      const std::vector<T> image = it->second.apply(kron<T>(out.w_basis[k], out.w_basis[l]));
      const std::size_t na = tensor_dimension(n, a);
      std::vector<T> rebuilt = zero_vector<T>(field, image.size());
      for (std::size_t l2 = first_of_degree[b]; l2 < first_of_degree[b + 1]; ++l2) {
        const std::size_t pl = p_v[b - 1].pivots()[l2 - first_of_degree[b]];
        for (std::size_t k2 = first_of_degree[a]; k2 < first_of_degree[a + 1]; ++k2) {
          const std::size_t pk = p_v[a - 1].pivots()[k2 - first_of_degree[a]];
          const T& coef = image[pl * na + pk];
          if (coef.is_zero()) continue;
          out.w_braiding(l2 * w + k2, k * w + l) = coef;
          const std::vector<T> term = kron<T>(out.w_basis[l2], out.w_basis[k2]);
          for (std::size_t j = 0; j < term.size(); ++j) rebuilt[j].add_mul(coef, term[j]);
        }
      }
      if (rebuilt != image) throw InvariantViolation("braiding does not preserve primitives (x) primitives");
    }
  }

  // Outer layer: primitives of T(W) restricted to V-degree <= inner_cutoff.
  const BraidedSpace<T> w_space = BraidedSpace<T>::from_matrix(w, out.w_braiding);
  const GradedQuotient<T> free_w = free_truncated(w_space, outer_cutoff);
  std::vector<std::vector<T>> gamma_w(w, zero_vector<T>(field, n));
  for (std::size_t k = first_of_degree[1]; k < first_of_degree[2]; ++k) gamma_w[k] = out.w_basis[k];

  std::vector<std::vector<T>> mult_cols;
  std::vector<std::vector<T>> outer_cols;
  std::vector<std::vector<T>> lifted_cols;
  for (std::size_t e = 1; e <= outer_cutoff; ++e) {
    const std::size_t size = tensor_dimension(w, e);
    std::vector<std::vector<std::size_t>> digits(size, std::vector<std::size_t>(e));
    std::vector<std::size_t> vdeg(size, 0);
    std::vector<std::vector<T>> allowed;
    for (std::size_t t = 0; t < size; ++t) {
      std::size_t rest = t;
      for (std::size_t pos = e; pos-- > 0;) {
        digits[t][pos] = rest % w;
        rest /= w;
        vdeg[t] += out.w_degrees[digits[t][pos]];
      }
      if (vdeg[t] <= inner_cutoff) allowed.push_back(unit_vector<T>(field, size, t));
    }
    if (allowed.empty()) continue;
    const Subspace<T> p_w = primitives(free_w, e).representatives;
    const Subspace<T> mm = intersect(p_w, Subspace<T>::span(field, size, allowed));

    for (std::size_t k = 0; k < mm.dim(); ++k) {
      auto z = mm.basis_vector(k);
      out.mm_basis.emplace_back(z.begin(), z.end());
      out.mm_degrees.push_back(e);

      // Concatenation, split by V-degree.
      std::map<std::size_t, std::vector<T>> by_degree;
      std::vector<T> lifted = zero_vector<T>(field, tensor_dimension(n, e));
      for (std::size_t t = 0; t < size; ++t) {
        if (z[t].is_zero()) continue;
        std::vector<const std::vector<T>*> factors;
        std::vector<const std::vector<T>*> gamma_factors;
        for (std::size_t digit : digits[t]) {
          factors.push_back(&out.w_basis[digit]);
          gamma_factors.push_back(&gamma_w[digit]);
        }
        const std::vector<T> product = kron_all(field, factors);
        auto slot = by_degree.try_emplace(vdeg[t], zero_vector<T>(field, product.size())).first;
        for (std::size_t j = 0; j < product.size(); ++j) {
          if (!product[j].is_zero()) slot->second[j].add_mul(z[t], product[j]);
        }
        const std::vector<T> gamma_product = kron_all(field, gamma_factors);
        for (std::size_t j = 0; j < gamma_product.size(); ++j) {
          if (!gamma_product[j].is_zero()) lifted[j].add_mul(z[t], gamma_product[j]);
        }
      }
      std::vector<T> mult = zero_vector<T>(field, w);
      for (const auto& [d, image] : by_degree) {
        if (is_zero_vector<T>(image)) continue;
        const std::vector<T> col = w_coordinates(d, image);
        for (std::size_t j = 0; j < w; ++j) mult[j] += col[j];
      }
      mult_cols.push_back(std::move(mult));
      lifted_cols.push_back(is_zero_vector<T>(lifted) ? zero_vector<T>(field, w) : w_coordinates(e, lifted));
      outer_cols.push_back(e == 1 ? std::vector<T>(z.begin(), z.end()) : zero_vector<T>(field, w));
    }
  }

  const std::size_t mm_dim = out.mm_basis.size();
  out.multiplication = Matrix<T>(field, w, mm_dim);
  out.gamma_outer = Matrix<T>(field, w, mm_dim);
  out.gamma_lifted = Matrix<T>(field, w, mm_dim);
  for (std::size_t c = 0; c < mm_dim; ++c) {
    for (std::size_t r = 0; r < w; ++r) {
      out.multiplication(r, c) = mult_cols[c][r];
      out.gamma_outer(r, c) = outer_cols[c][r];
      out.gamma_lifted(r, c) = lifted_cols[c][r];
    }
  }
  out.gamma = Matrix<T>(field, n, w);
  for (std::size_t k = 0; k < w; ++k) {
    for (std::size_t r = 0; r < n; ++r) out.gamma(r, k) = gamma_w[k][r];
  }
  out.unit = Matrix<T>(field, w, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::vector<T> col = w_coordinates(1, unit_vector<T>(field, n, v));
    for (std::size_t r = 0; r < w; ++r) out.unit(r, v) = col[r];
  }
  return out;
}

template <FieldScalar T>
bool monad_augmentation_check(const BraidedSpace<T>& space, std::size_t outer_cutoff, std::size_t inner_cutoff) {
  const MonadLayers<T> m = monad_layers(space, outer_cutoff, inner_cutoff);
  const Matrix<T> id = Matrix<T>::identity(space.field(), space.dimension());
  const Matrix<T> reference = m.gamma * m.gamma_outer;
  return m.gamma * m.unit == id && m.gamma * m.multiplication == reference && m.gamma * m.gamma_lifted == reference;
}

#define NICHOLS_TOWER_INSTANTIATE(T)                                                                 \
  template StepResult<T> step(const GradedQuotient<T>&, std::size_t);                                \
  template RankReport<T> run(const BraidedSpace<T>&, std::size_t, std::size_t, StageCache<T>*);      \
  template PrimitiveSpace<T> primitive_space(const GradedQuotient<T>&);                              \
  template bool gamma_retraction_check(const GradedQuotient<T>&);                                    \
  template bool idempotent_check(const GradedQuotient<T>&);                                          \
  template bool em_unit_check(const BraidedSpace<T>&, std::size_t, const Matrix<T>&);                \
  template MonadLayers<T> monad_layers(const BraidedSpace<T>&, std::size_t, std::size_t);            \
  template bool monad_augmentation_check(const BraidedSpace<T>&, std::size_t, std::size_t);

NICHOLS_TOWER_INSTANTIATE(Rational)
NICHOLS_TOWER_INSTANTIATE(ModP)

}  // namespace nichols
