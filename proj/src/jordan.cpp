#include "magica/jordan.hpp"

namespace magica {

bool JordanElement::is_zero() const {
  for (const auto& r : diag) {
    if (!r.is_zero()) return false;
  }
  for (const auto& x : off) {
    if (!x.is_zero()) return false;
  }
  return true;
}

JordanElement j_zero(AlgebraTag tag) { return JordanElement(tag); }

JordanElement j_identity(AlgebraTag tag) {
  return j_diag(tag, kOne, kOne, kOne);
}

JordanElement j_diag(AlgebraTag tag, const GaussRat& r1, const GaussRat& r2, const GaussRat& r3) {
  JordanElement a(tag);
  a.diag = {r1, r2, r3};
  return a;
}

JordanElement j_diag_unit(AlgebraTag tag, int k) {
  JordanElement a(tag);
  a.diag[k] = kOne;
  return a;
}

namespace {
void check_tags(const JordanElement& a, const JordanElement& b) {
  if (a.tag != b.tag) throw TagMismatch();
}
}  // namespace

JordanElement j_add(const JordanElement& a, const JordanElement& b) {
  check_tags(a, b);
  JordanElement z(a.tag);
  for (int i = 0; i < 3; ++i) {
    z.diag[i] = a.diag[i] + b.diag[i];
    z.off[i] = cd_add(a.off[i], b.off[i]);
  }
  return z;
}

JordanElement j_sub(const JordanElement& a, const JordanElement& b) {
  check_tags(a, b);
  JordanElement z(a.tag);
  for (int i = 0; i < 3; ++i) {
    z.diag[i] = a.diag[i] - b.diag[i];
    z.off[i] = cd_sub(a.off[i], b.off[i]);
  }
  return z;
}

JordanElement j_neg(const JordanElement& a) {
  JordanElement z(a.tag);
  for (int i = 0; i < 3; ++i) {
    z.diag[i] = -a.diag[i];
    z.off[i] = cd_neg(a.off[i]);
  }
  return z;
}

JordanElement j_scale(const GaussRat& s, const JordanElement& a) {
  JordanElement z(a.tag);
  for (int i = 0; i < 3; ++i) {
    z.diag[i] = s * a.diag[i];
    z.off[i] = cd_scale(s, a.off[i]);
  }
  return z;
}

JordanElement j_random(AlgebraTag tag, Rng& rng, std::int64_t bound) {
  JordanElement z(tag);
  for (int i = 0; i < 3; ++i) {
    z.diag[i] = rng.scalar(bound);
    z.off[i] = cd_random(tag, rng, bound);
  }
  return z;
}

int j_flat_dim(AlgebraTag tag) { return 3 + 3 * tag.dim; }

std::vector<GaussRat> j_flatten(const JordanElement& a) {
  std::vector<GaussRat> out;
  out.reserve(j_flat_dim(a.tag));
  for (const auto& r : a.diag) out.push_back(r);
  for (const auto& x : a.off) {
    for (const auto& c : x.coeffs) out.push_back(c);
  }
  return out;
}

JordanElement j_unflatten(AlgebraTag tag, const std::vector<GaussRat>& coords) {
  if (static_cast<int>(coords.size()) != j_flat_dim(tag)) {
    throw Error("flat coordinate count does not match 3*dim + 3");
  }
  JordanElement a(tag);
  std::size_t i = 0;
  for (auto& r : a.diag) r = coords[i++];
  for (auto& x : a.off) {
    for (auto& c : x.coeffs) c = coords[i++];
  }
  return a;
}

std::vector<JordanElement> j_basis(AlgebraTag tag) {
  std::vector<JordanElement> out;
  out.reserve(j_flat_dim(tag));
  for (int k = 0; k < 3; ++k) out.push_back(j_diag_unit(tag, k));
  for (int slot = 0; slot < 3; ++slot) {
    for (int k = 0; k < tag.dim; ++k) {
      JordanElement a(tag);
      a.off[slot] = cd_unit(tag, k);
      out.push_back(a);
    }
  }
  return out;
}

GaussRat det_norm(const JordanElement& a) {
  const auto& [r1, r2, r3] = a.diag;
  const auto& [x1, x2, x3] = a.off;
  GaussRat n = r1 * r2 * r3;
  n -= r1 * cd_norm(x1);
  n -= r2 * cd_norm(x2);
  n -= r3 * cd_norm(x3);
  n += cd_trace(cd_mul(cd_mul(x1, x2), x3));
  return n;
}

JordanElement sharp(const JordanElement& a) {
  JordanElement z(a.tag);
  z.diag[0] = a.diag[1] * a.diag[2] - cd_norm(a.off[0]);
  z.diag[1] = a.diag[2] * a.diag[0] - cd_norm(a.off[1]);
  z.diag[2] = a.diag[0] * a.diag[1] - cd_norm(a.off[2]);
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    z.off[i] = cd_sub(cd_mul(cd_conj(a.off[k]), cd_conj(a.off[j])),
                      cd_scale(a.diag[i], a.off[i]));
  }
  return z;
}

JordanElement cross(const JordanElement& a, const JordanElement& b) {
  return j_sub(j_sub(sharp(j_add(a, b)), sharp(a)), sharp(b));
}

GaussRat trace_pair(const JordanElement& a, const JordanElement& b) {
  check_tags(a, b);
  GaussRat s;
  for (int i = 0; i < 3; ++i) s += a.diag[i] * b.diag[i];
  for (int i = 0; i < 3; ++i) s += cd_trace(cd_mul(a.off[i], cd_conj(b.off[i])));
  return s;
}

int rank_of(const JordanElement& a) {
  if (!det_norm(a).is_zero()) return 3;
  if (!sharp(a).is_zero()) return 2;
  if (!a.is_zero()) return 1;
  return 0;
}

JordanElement gram_rank1(const CdElement& u1, const CdElement& u2, const GaussRat& t) {
  if (u1.tag != u2.tag) throw TagMismatch();
  if (u1.is_zero() && u2.is_zero() && t.is_zero()) {
    throw DegenerateInput("gram of the zero column");
  }
  JordanElement z(u1.tag);
  z.diag = {cd_norm(u1), cd_norm(u2), t * t};
  z.off[0] = cd_scale(t, u2);
  z.off[1] = cd_scale(t, cd_conj(u1));
  z.off[2] = cd_mul(u1, cd_conj(u2));
  // isotropic columns can collapse to zero over C; that breaks the
  // rank-1 contract, so reject them
  if (z.is_zero()) throw DegenerateInput("gram of an isotropic column");
  return z;
}

JordanElement random_rank1(AlgebraTag tag, Rng& rng, std::int64_t bound) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    CdElement u1 = cd_random(tag, rng, bound);
    CdElement u2 = cd_random(tag, rng, bound);
    GaussRat t = rng.scalar(bound);
    if (u1.is_zero() && u2.is_zero() && t.is_zero()) continue;
    try {
      return gram_rank1(u1, u2, t);
    } catch (const DegenerateInput&) {
    }
  }
  throw ResampleLimit("a rank-1 element");
}

JordanElement random_rank2(AlgebraTag tag, Rng& rng, std::int64_t bound) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    JordanElement a = j_add(random_rank1(tag, rng, bound), random_rank1(tag, rng, bound));
    if (rank_of(a) == 2) return a;
  }
  throw ResampleLimit("a rank-2 element");
}

JordanElement permute_slots(const JordanElement& a, const std::array<int, 3>& perm) {
  // expand to the full entry matrix, permute, read the slots back
  std::array<std::array<CdElement, 3>, 3> ent{
      std::array<CdElement, 3>{cd_from_scalar(a.tag, a.diag[0]), a.off[2], cd_conj(a.off[1])},
      std::array<CdElement, 3>{cd_conj(a.off[2]), cd_from_scalar(a.tag, a.diag[1]), a.off[0]},
      std::array<CdElement, 3>{a.off[1], cd_conj(a.off[0]), cd_from_scalar(a.tag, a.diag[2])}};
  JordanElement z(a.tag);
  for (int i = 0; i < 3; ++i) z.diag[i] = ent[perm[i]][perm[i]].scalar_part();
  z.off[0] = ent[perm[1]][perm[2]];
  z.off[1] = ent[perm[2]][perm[0]];
  z.off[2] = ent[perm[0]][perm[1]];
  return z;
}

}  // namespace magica
