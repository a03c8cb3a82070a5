#include <algorithm>
#include <numeric>
#include <random>

#include "findim/algebra.hpp"

namespace findim {

namespace {

struct Word {
  Vec in_a;
  std::vector<std::size_t> letters;  // generator indices, applied left to right as left factors
  std::size_t vertex;
};

// Spanning words: e_v, then g * w for arrows g.
std::vector<Word> spanning_words(const BasedAlgebra& a) {
  std::vector<Word> words;
  Subspace span = zero_subspace(a.dim());
  std::vector<std::size_t> frontier;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    words.push_back({a.idempotents()[v], {}, v});
    span = subspace_sum(span, span_vectors({a.idempotents()[v]}, a.dim()));
    frontier.push_back(words.size() - 1);
  }
  while (!frontier.empty() && span.dim() < a.dim()) {
    std::vector<std::size_t> next;
    for (auto w : frontier)
      for (std::size_t g = 0; g < a.arrows().size(); ++g) {
        Vec p = a.multiply(a.arrows()[g].element, words[w].in_a);
        if (span.contains(p)) continue;
        span = subspace_sum(span, span_vectors({p}, a.dim()));
        Word nw = words[w];
        nw.in_a = p;
        nw.letters.push_back(g);
        words.push_back(nw);
        next.push_back(words.size() - 1);
      }
    frontier = std::move(next);
  }
  if (span.dim() < a.dim()) return {};
  return words;
}

}  // namespace

std::optional<AlgebraHom> find_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, std::uint64_t seed) {
  if (a->dim() != b->dim() || a->vertex_count() != b->vertex_count()) return std::nullopt;
  if (!a->is_split_basic() || !b->is_split_basic()) return std::nullopt;
  if (a->arrows().size() != b->arrows().size()) return std::nullopt;
  const std::size_t r = a->vertex_count(), n = a->dim();
  if (r > 7) return std::nullopt;
  auto words = spanning_words(*a);
  if (words.empty()) return std::nullopt;

  std::vector<std::size_t> profile_a(r * r), profile_b(r * r);
  std::vector<Subspace> rad_b(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      profile_a[i * r + j] = a->peirce(a->idempotents()[i], a->idempotents()[j]).dim();
      Subspace pb = b->peirce(b->idempotents()[i], b->idempotents()[j]);
      profile_b[i * r + j] = pb.dim();
      rad_b[i * r + j] = subspace_intersection(pb, b->radical());
    }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  Mat words_a(n, n);
  for (std::size_t k = 0; k < n; ++k) words_a.set_col(k, words[k].in_a);
  auto inv_a = inverse(words_a);
  if (!inv_a) return std::nullopt;

  do {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < r && ok; ++j) ok = profile_a[i * r + j] == profile_b[perm[i] * r + perm[j]];
    if (!ok) continue;
    for (int trial = 0; trial < 32; ++trial) {
      std::vector<Vec> img(a->arrows().size());
      for (std::size_t g = 0; g < img.size(); ++g) {
        const auto& arr = a->arrows()[g];
        const Subspace& target = rad_b[perm[arr.target] * r + perm[arr.source]];
        img[g] = Vec(n);
        if (target.dim() == 0) continue;
        while (is_zero(img[g])) {
          img[g] = Vec(n);
          for (std::size_t k = 0; k < target.dim(); ++k) axpy(img[g], Rat(coeff(rng)), target.vector(k));
        }
      }
      Mat words_b(n, n);
      for (std::size_t k = 0; k < n; ++k) {
        Vec v = b->idempotents()[perm[words[k].vertex]];
        for (auto g : words[k].letters) v = b->multiply(img[g], v);
        words_b.set_col(k, v);
      }
      Mat phi = words_b * *inv_a;
      if (rank(phi) != n) continue;
      try {
        return AlgebraHom::make(a, b, phi);
      } catch (const Error&) {
        continue;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace findim
