#include "gfrep/rep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

namespace gfrep {

struct Representation::Cache {
  std::mutex mu;
  std::map<int, MatGF> images;
};

Representation::Representation(Subgroup domain, FieldPtr field,
                               std::vector<MatGF> images, bool validate,
                               int dim_hint)
    : domain_(std::move(domain)),
      field_(std::move(field)),
      images_(std::move(images)),
      cache_(std::make_shared<Cache>()) {
  if (!field_) throw ValidationError("representation needs a field");
  if (images_.size() != domain_.generators().size())
    throw ValidationError("one image required per domain generator");
  dim_ = -1;
  for (auto& m : images_) {
    if (m.rows() != m.cols())
      throw ValidationError("generator image is not square");
    if (dim_ < 0) dim_ = static_cast<int>(m.rows());
    if (m.rows() != dim_)
      throw ValidationError("generator images have mixed dimensions");
    m = bind_all(*field_, m);
  }
  if (dim_ < 0) dim_ = dim_hint > 0 ? dim_hint : 1;
  if (dim_ == 0) throw ValidationError("zero-dimensional representation");
  if (validate) {
    for (const auto& m : images_)
      if (!is_invertible(m))
        throw ValidationError("generator image is singular");
    check_homomorphism(true);
  }
}

const MatGF& Representation::image(int element) const {
  if (!domain_.contains(element))
    throw ValidationError("element outside the representation's domain");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->images.find(element);
  if (it != cache_->images.end()) return it->second;
  MatGF m = identity(*field_, dim_);
  for (int gi : domain_.word(element)) m = (m * images_[gi]).eval();
  return cache_->images.emplace(element, std::move(m)).first->second;
}

std::vector<MatGF> Representation::images_of(
    const std::vector<int>& elements) const {
  std::vector<MatGF> out;
  out.reserve(elements.size());
  for (int e : elements) out.push_back(image(e));
  return out;
}

void Representation::check_homomorphism(bool full) const {
  const Group& G = domain_.group();
  // identity must resolve to the identity matrix
  if (image(G.identity()) != identity(*field_, dim_))
    throw ValidationError("identity does not map to the identity matrix");
  const auto& elems = domain_.elements();
  size_t gens = std::max<size_t>(domain_.generators().size(), 1);
  double cost = double(elems.size()) * double(gens) * double(dim_) *
                double(dim_) * double(dim_);
  bool do_full = full && cost <= 2e8;
  if (do_full) {
    for (int e : elems) {
      for (size_t gi = 0; gi < domain_.generators().size(); ++gi) {
        int g = domain_.generators()[gi];
        if (image(G.mult(e, g)) != (image(e) * images_[gi]).eval())
          throw ValidationError(
              "images violate the homomorphism property (word "
              "evaluates inconsistently)");
      }
    }
  } else {
    std::mt19937_64 rng(0);
    for (int t = 0; t < 200; ++t) {
      int a = elems[rng() % elems.size()];
      int b = elems[rng() % elems.size()];
      if (image(G.mult(a, b)) != (image(a) * image(b)).eval())
        throw ValidationError("images violate the homomorphism property");
    }
  }
}

Representation rep_from_images(Subgroup domain, FieldPtr field,
                               std::vector<MatGF> images) {
  return Representation(std::move(domain), std::move(field),
                        std::move(images), true);
}

Representation trivial_rep(Subgroup domain, FieldPtr field) {
  std::vector<MatGF> images(domain.generators().size(),
                            identity(*field, 1));
  return Representation(std::move(domain), std::move(field),
                        std::move(images), false);
}

Representation regular_rep(Subgroup domain, FieldPtr field) {
  const Group& G = domain.group();
  int n = domain.order();
  std::vector<MatGF> images;
  images.reserve(domain.generators().size());
  for (int g : domain.generators()) {
    MatGF m = zeros(*field, n, n);
    for (int c = 0; c < n; ++c) {
      int h = domain.elements()[c];
      m(domain.position(G.mult(g, h)), c) = field->one();
    }
    images.push_back(std::move(m));
  }
  return Representation(std::move(domain), std::move(field),
                        std::move(images), false);
}

Representation restrict_rep(const Representation& V, const Subgroup& S) {
  if (!V.domain().contains_subgroup(S))
    throw ValidationError("restriction target is not a subgroup of the domain");
  std::vector<MatGF> images;
  images.reserve(S.generators().size());
  for (int g : S.generators()) images.push_back(V.image(g));
  return Representation(S, V.field_ptr(), std::move(images), false, V.dim());
}

Representation induce(const Representation& L, const Subgroup& T) {
  const Subgroup& H = L.domain();
  if (!T.contains_subgroup(H))
    throw ValidationError("induction source is not a subgroup of the target");
  const Group& G = T.group();
  const Field& F = L.field();
  std::vector<int> reps = left_coset_reps(T, H);
  int idx = static_cast<int>(reps.size());
  int d = L.dim();

  std::vector<int> coset_of(G.order(), -1);
  for (int i = 0; i < idx; ++i)
    for (int h : H.elements()) coset_of[G.mult(reps[i], h)] = i;

  std::vector<MatGF> images;
  images.reserve(T.generators().size());
  for (int g : T.generators()) {
    MatGF m = zeros(F, static_cast<Eigen::Index>(idx) * d,
                    static_cast<Eigen::Index>(idx) * d);
    for (int i = 0; i < idx; ++i) {
      int u = G.mult(g, reps[i]);
      int j = coset_of[u];
      int h = G.mult(G.inverse(reps[j]), u);
      const MatGF& blk = L.image(h);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(j * d + r, i * d + c) = blk(r, c);
    }
    images.push_back(std::move(m));
  }
  return Representation(T, L.field_ptr(), std::move(images), false);
}

Representation conjugate_rep(const Representation& L, int x) {
  Subgroup conj = L.domain().conjugate_by(x);
  // rho^x(x g x^-1) = rho(g): images carry over along conjugated generators.
  return Representation(std::move(conj), L.field_ptr(), L.gen_images(),
                        false);
}

namespace {

void require_same_domain(const Representation& M, const Representation& N) {
  if (!M.domain().same_as(N.domain()))
    throw ValidationError("representations live over different groups");
  if (!M.field().same_as(N.field()))
    throw ValidationError("representations live over different fields");
}

}  // namespace

std::vector<MatGF> hom_basis(const Representation& M,
                             const Representation& N) {
  require_same_domain(M, N);
  const std::vector<int>& gens = M.domain().generators();
  if (gens.empty()) {
    // Trivial group: every matrix is a homomorphism.
    const Field& F = M.field();
    std::vector<MatGF> all;
    all.reserve(static_cast<size_t>(M.dim()) * N.dim());
    for (int a = 0; a < N.dim(); ++a)
      for (int b = 0; b < M.dim(); ++b) {
        MatGF E = zeros(F, N.dim(), M.dim());
        E(a, b) = F.one();
        all.push_back(std::move(E));
      }
    return all;
  }
  return solve_commutant(M.images_of(gens), N.images_of(gens));
}

int intertwining_number(const Representation& M, const Representation& N) {
  return static_cast<int>(hom_basis(M, N).size());
}

bool is_disjoint(const Representation& M, const Representation& N) {
  require_same_domain(M, N);
  if (M.domain().order() % M.field().p() == 0)
    throw HypothesisError(
        "disjointness via i = 0 needs char not dividing the group order");
  return intertwining_number(M, N) == 0;
}

std::optional<MatGF> find_iso_intertwiner(const Representation& M,
                                          const Representation& N,
                                          uint64_t seed) {
  auto basis = hom_basis(M, N);
  if (basis.empty()) return std::nullopt;
  for (const auto& X : basis)
    if (is_invertible(X)) return X;
  // Schur guarantees an invertible element exists when M, N are
  // irreducible; sweep small deterministic combinations, then sample.
  const Field& F = M.field();
  if (basis.size() >= 2) {
    for (uint32_t c = 1; c < F.q() && c < 64; ++c) {
      for (size_t i = 0; i + 1 < basis.size(); ++i) {
        MatGF X = basis[i];
        for (Eigen::Index r = 0; r < X.rows(); ++r)
          for (Eigen::Index cc = 0; cc < X.cols(); ++cc)
            X(r, cc) = X(r, cc) + GF(&F, c) * basis[i + 1](r, cc);
        if (is_invertible(X)) return X;
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 1000; ++t) {
    MatGF X = zeros(F, basis[0].rows(), basis[0].cols());
    for (const auto& B : basis) {
      GF c = GF(&F, static_cast<uint32_t>(rng() % F.q()));
      for (Eigen::Index r = 0; r < X.rows(); ++r)
        for (Eigen::Index cc = 0; cc < X.cols(); ++cc)
          X(r, cc) += c * B(r, cc);
    }
    if (is_invertible(X)) return X;
  }
  throw CertificationError(
      "nonzero Hom space contains no invertible element after search; "
      "inputs are likely not irreducible");
}

bool is_isomorphic_irreducible(const Representation& M,
                               const Representation& N) {
  if (M.dim() != N.dim()) return false;
  if (intertwining_number(M, N) == 0) return false;
  // Remark-2.1(d) direction plus an explicit certificate.
  auto X = find_iso_intertwiner(M, N);
  if (!X) return false;
  // verify X rho_M(g) = rho_N(g) X on generators
  const auto& gens = M.domain().generators();
  auto A = M.images_of(gens);
  auto B = N.images_of(gens);
  for (size_t i = 0; i < A.size(); ++i)
    if (((*X) * A[i]).eval() != (B[i] * (*X)).eval())
      throw CertificationError("intertwiner certificate failed");
  return true;
}

}  // namespace gfrep
