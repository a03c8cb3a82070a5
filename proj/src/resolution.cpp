#include "findim/resolution.hpp"

namespace findim {

ProjectiveCover projective_cover(const ProjectiveCatalog& cat, const Module& m) {
  if (m.side() != Side::Left || !same_algebra(m.algebra(), cat.algebra()))
    throw Error("projective_cover expects a left module over the catalog algebra");
  const BasedAlgebra& a = *cat.algebra();
  if (!a.has_split_idempotents())
    throw Error("projective covers need primitive idempotents with residue field Q");
  Subspace covered = radical_subspace(m);
  std::vector<Vec> gens;
  std::vector<std::size_t> verts;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    const Vec& e = a.idempotents()[v];
    Subspace ev = column_space(m.act(e));
    Subspace corner = a.peirce(e, e);
    for (std::size_t k = 0; k < ev.dim() && covered.dim() < m.dim(); ++k) {
      Vec u = ev.vector(k);
      if (covered.contains(u)) continue;
      gens.push_back(u);
      verts.push_back(v);
      // Over a non-split corner one generator covers a whole residue block.
      std::vector<Vec> orbit;
      for (std::size_t c = 0; c < corner.dim(); ++c) orbit.push_back(m.act(corner.vector(c)).apply(u));
      covered = subspace_sum(covered, span_vectors(orbit, m.dim()));
    }
  }
  ProjectiveCover out;
  out.projective = cat.sum(verts);
  out.generators = gens;
  out.map = cat.map_from(out.projective, m, gens);
  return out;
}

ProjectiveCover projective_cover(const Module& m) {
  Module l = m.as_left();
  return projective_cover(ProjectiveCatalog(l.algebra()), l);
}

Vec Resolution::component(std::size_t j, std::size_t l, std::size_t lp) const {
  if (j == 0 || j >= terms.size()) throw Error("resolution component out of range");
  Vec img = differentials[j - 1].apply(terms[j].generator(l));
  return terms[j - 1].component(lp, img);
}

Resolution minimal_resolution(const Module& m, std::size_t steps, bool detect_periodic) {
  Resolution res;
  res.module = m.as_left();
  res.syzygies.push_back(res.module);
  if (res.module.dim() == 0) {
    res.pd = ExtNat::finite(0);
    return res;
  }
  ProjectiveCatalog cat(res.module.algebra());
  std::vector<std::vector<std::size_t>> dimvecs{dimension_vector(res.module)};
  for (std::size_t j = 0; j < steps; ++j) {
    ProjectiveCover cov = projective_cover(cat, res.syzygies[j]);
    res.terms.push_back(cov.projective);
    if (j == 0)
      res.augmentation = cov.map;
    else
      res.differentials.push_back(res.syzygy_inclusions[j - 1] * cov.map);
    Submodule k = submodule(cov.projective.module, null_space(cov.map));
    res.syzygies.push_back(k.module);
    res.syzygy_inclusions.push_back(k.space.basis.transpose());
    if (k.module.dim() == 0) {
      res.pd = ExtNat::finite(static_cast<long>(j));
      return res;
    }
    auto dv = dimension_vector(k.module);
    if (detect_periodic) {
      for (std::size_t i = 0; i <= j; ++i) {
        if (dimvecs[i] != dv) continue;
        if (find_module_isomorphism(res.syzygies[i], k.module, i + j)) {
          res.periodic = true;
          res.period_start = i;
          res.period_end = j + 1;
          res.pd = ExtNat::infinite();
          return res;
        }
      }
    }
    dimvecs.push_back(std::move(dv));
  }
  res.pd = ExtNat::unknown(static_cast<long>(steps));
  return res;
}

ExtNat projective_dimension(const Module& m, std::size_t cap) { return minimal_resolution(m, cap).pd; }

ExtNat injective_dimension(const Module& m, std::size_t cap) { return projective_dimension(dual_module(m), cap); }

namespace {

// Ranks of a complex with terms t_0..t_{k-1} and maps r_j : t_j -> t_{j-1}
// (or the dual direction), turned into homology dimensions.
std::vector<ExtNat> homology_dims(const std::vector<std::size_t>& term_dims, const std::vector<std::size_t>& ranks,
                                  bool terminated, std::size_t max_i) {
  // ranks[j] is the rank of the map between degree j and j-1 (ranks[0] = 0).
  const std::size_t k = term_dims.size();
  std::vector<ExtNat> out;
  for (std::size_t i = 0; i <= max_i; ++i) {
    if (i >= k) {
      out.push_back(terminated ? ExtNat::finite(0) : ExtNat::unknown(0));
      continue;
    }
    long r_in = i + 1 < k ? static_cast<long>(ranks[i + 1]) : 0;
    if (i + 1 >= k && !terminated) {
      out.push_back(ExtNat::unknown(0));
      continue;
    }
    out.push_back(ExtNat::finite(static_cast<long>(term_dims[i]) - static_cast<long>(ranks[i]) - r_in));
  }
  return out;
}

}  // namespace

std::vector<ExtNat> tor_dims(const Module& x, const Module& y, std::size_t max_i, std::size_t cap) {
  if (x.side() != Side::Right || y.side() != Side::Left) throw Error("tor expects a right module and a left module");
  if (!same_algebra(x.algebra(), y.algebra())) throw Error("tor: modules over different algebras");
  const BasedAlgebra& a = *y.algebra();
  Resolution res = minimal_resolution(y, std::min(cap, max_i + 2), false);
  const bool terminated = res.pd.is_finite();
  std::vector<Subspace> xe;
  for (const auto& e : a.idempotents()) xe.push_back(column_space(x.act(e)));
  const std::size_t k = res.length();
  std::vector<std::size_t> dims(k), ranks(k, 0);
  std::vector<std::vector<std::size_t>> offs(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t t = 0;
    for (auto v : res.terms[j].vertices) {
      offs[j].push_back(t);
      t += xe[v].dim();
    }
    dims[j] = t;
  }
  for (std::size_t j = 1; j < k; ++j) {
    const auto& pj = res.terms[j];
    const auto& pm = res.terms[j - 1];
    Mat d(dims[j - 1], dims[j]);
    for (std::size_t l = 0; l < pj.summands(); ++l)
      for (std::size_t lp = 0; lp < pm.summands(); ++lp) {
        Vec yv = res.component(j, l, lp);
        if (is_zero(yv)) continue;
        Mat act = x.act(yv);
        const Subspace& src = xe[pj.vertices[l]];
        const Subspace& dst = xe[pm.vertices[lp]];
        for (std::size_t c = 0; c < src.dim(); ++c) {
          Vec img = dst.coords(act.apply(src.vector(c)));
          for (std::size_t r = 0; r < img.size(); ++r) d(offs[j - 1][lp] + r, offs[j][l] + c) = img[r];
        }
      }
    ranks[j] = rank(d);
  }
  return homology_dims(dims, ranks, terminated, max_i);
}

std::vector<ExtNat> ext_dims(const Module& m, const Module& n, std::size_t max_i, std::size_t cap) {
  if (!compatible(m, n)) throw Error("ext: modules over different algebras or sides");
  Module lm = m.as_left(), ln = n.as_left();
  const BasedAlgebra& a = *lm.algebra();
  Resolution res = minimal_resolution(lm, std::min(cap, max_i + 2), false);
  const bool terminated = res.pd.is_finite();
  std::vector<Subspace> ne;
  for (const auto& e : a.idempotents()) ne.push_back(column_space(ln.act(e)));
  const std::size_t k = res.length();
  std::vector<std::size_t> dims(k), ranks(k, 0);
  std::vector<std::vector<std::size_t>> offs(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t t = 0;
    for (auto v : res.terms[j].vertices) {
      offs[j].push_back(t);
      t += ne[v].dim();
    }
    dims[j] = t;
  }
  for (std::size_t j = 1; j < k; ++j) {
    const auto& pj = res.terms[j];
    const auto& pm = res.terms[j - 1];
    Mat d(dims[j], dims[j - 1]);
    for (std::size_t l = 0; l < pj.summands(); ++l)
      for (std::size_t lp = 0; lp < pm.summands(); ++lp) {
        Vec yv = res.component(j, l, lp);
        if (is_zero(yv)) continue;
        Mat act = ln.act(yv);
        const Subspace& src = ne[pm.vertices[lp]];
        const Subspace& dst = ne[pj.vertices[l]];
        for (std::size_t c = 0; c < src.dim(); ++c) {
          Vec img = dst.coords(act.apply(src.vector(c)));
          for (std::size_t r = 0; r < img.size(); ++r) d(offs[j][l] + r, offs[j - 1][lp] + c) = img[r];
        }
      }
    ranks[j] = rank(d);
  }
  return homology_dims(dims, ranks, terminated, max_i);
}

}  // namespace findim
