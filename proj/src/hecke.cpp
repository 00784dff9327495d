#include "qre/hecke.hpp"

#include "qre/qscalar.hpp"

namespace qre {

HeckeSymmetry::HeckeSymmetry(size_t n, ScalarMatrix m) : n_(n), m_(std::move(m)) {
    if (m_.rows() != n * n || m_.cols() != n * n)
        throw ShapeMismatch("HeckeSymmetry: matrix must be n^2 x n^2");
    braid_ok_ = check_braid(m_, n_).ok;
    hecke_ok_ = check_hecke(m_, n_).ok;
}

HeckeSymmetry HeckeSymmetry::validated(size_t n, ScalarMatrix m) {
    HeckeSymmetry h(n, std::move(m));
    if (!h.braid_ok_) throw VerificationFailed("matrix fails the braid relation");
    if (!h.hecke_ok_) throw VerificationFailed("matrix fails the Hecke condition");
    return h;
}

namespace {
size_t ipow(size_t base, size_t e) {
    size_t r = 1;
    while (e--) r *= base;
    return r;
}
} // namespace

ScalarMatrix HeckeSymmetry::embed_at(size_t i, size_t k) const {
    if (i < 1 || i + 1 > k) throw ShapeMismatch("embed_at: slot out of range");
    auto ctx = m_.ctx();
    ScalarMatrix left = ScalarMatrix::identity(ipow(n_, i - 1), ctx);
    ScalarMatrix right = ScalarMatrix::identity(ipow(n_, k - i - 1), ctx);
    return left.kron(m_).kron(right);
}

HeckeSymmetry standard_r(size_t n, const ParamSetPtr& ps) {
    if (n < 2) throw Error("standard_r: n must be at least 2");
    FieldOps<QScalar>::Context ctx{ps};
    ScalarMatrix m(n * n, n * n, ctx);
    QScalar q = QScalar::q(ps);
    QScalar qi = q.inv();
    auto idx = [n](size_t i, size_t j) { return i * n + j; };
    for (size_t i = 0; i < n; ++i) m.at(idx(i, i), idx(i, i)) = q;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            m.at(idx(j, i), idx(i, j)) = QScalar::one(ps);
            if (i < j) m.at(idx(i, j), idx(i, j)) = q - qi;
        }
    return HeckeSymmetry::validated(n, std::move(m));
}

namespace {
IdentityWitness witness_of(const ScalarMatrix& diff) {
    IdentityWitness w;
    auto nz = diff.first_nonzero();
    if (nz) {
        w.ok = false;
        w.row = nz->first;
        w.col = nz->second;
        w.value = diff.at(nz->first, nz->second).str();
    }
    return w;
}
} // namespace

IdentityWitness check_braid(const ScalarMatrix& R, size_t n) {
    auto ctx = R.ctx();
    ScalarMatrix id = ScalarMatrix::identity(n, ctx);
    ScalarMatrix r12 = R.kron(id);
    ScalarMatrix r23 = id.kron(R);
    return witness_of(r12 * r23 * r12 - r23 * r12 * r23);
}

IdentityWitness check_hecke(const ScalarMatrix& R, size_t n) {
    auto ctx = R.ctx();
    QScalar q = QScalar::q(ctx.ps);
    ScalarMatrix id = ScalarMatrix::identity(n * n, ctx);
    return witness_of(R * R - R * (q - q.inv()) - id);
}

namespace {

// Rescale a candidate projector to exact idempotency. Accepts P with
// P^2 = lambda P for a nonzero scalar lambda; anything else is an error.
ScalarMatrix rescale_idempotent(ScalarMatrix p, const char* what) {
    ScalarMatrix sq = p * p;
    if (sq == p) return p;
    auto nz = p.first_nonzero();
    if (!nz) throw NotIdempotent(std::string(what) + ": zero candidate");
    QScalar lambda = sq.at(nz->first, nz->second) / p.at(nz->first, nz->second);
    if (lambda.is_zero()) throw NotIdempotent(std::string(what) + ": nilpotent candidate");
    if (!(sq == p * lambda)) throw NotIdempotent(std::string(what) + ": not proportional");
    ScalarMatrix fixed = p * lambda.inv();
    if (!(fixed * fixed == fixed)) throw NotIdempotent(std::string(what) + ": rescale failed");
    return fixed;
}

enum class Family { Plus, Minus };

ScalarMatrix projector_recursive(const HeckeSymmetry& R, int k, Family fam) {
    auto ctx = R.matrix().ctx();
    const ParamSetPtr& ps = ctx.ps;
    size_t n = R.dim();
    if (k < 1) throw Error("projector: k must be positive");
    if (k == 1) return ScalarMatrix::identity(n, ctx);
    ScalarMatrix prev = projector_recursive(R, k - 1, fam);
    ScalarMatrix a = prev.kron(ScalarMatrix::identity(n, ctx));
    ScalarMatrix rk = R.embed_at(size_t(k - 1), size_t(k));
    QScalar q = QScalar::q(ps);
    QScalar kq = q_number(ps, k);
    QScalar km1q = q_number(ps, k - 1);
    size_t dim = a.rows();
    ScalarMatrix mid(dim, dim, ctx);
    if (fam == Family::Plus) {
        // (q^{k-1}/[k]) (q^{-(k-1)} id + [k-1] R_{k-1})
        ScalarMatrix id = ScalarMatrix::identity(dim, ctx);
        mid = (id * q.pow(-(k - 1)) + rk * km1q) * (q.pow(k - 1) / kq);
    } else {
        ScalarMatrix id = ScalarMatrix::identity(dim, ctx);
        mid = (id * q.pow(k - 1) - rk * km1q) * (q.pow(-(k - 1)) / kq);
    }
    ScalarMatrix cand = a * mid * a;
    return rescale_idempotent(std::move(cand), fam == Family::Plus ? "symmetrizer"
                                                                   : "antisymmetrizer");
}

} // namespace

ScalarMatrix symmetrizer(const HeckeSymmetry& R, int k) {
    return projector_recursive(R, k, Family::Plus);
}

ScalarMatrix antisymmetrizer(const HeckeSymmetry& R, int k) {
    return projector_recursive(R, k, Family::Minus);
}

std::vector<long> poincare_minus(const HeckeSymmetry& R, int kmax) {
    std::vector<long> ranks;
    ranks.push_back(1); // k = 0: the ground field
    for (int k = 1; k <= kmax; ++k) {
        if (k == 1) {
            ranks.push_back(long(R.dim()));
            continue;
        }
        ranks.push_back(long(antisymmetrizer(R, k).rank()));
    }
    return ranks;
}

int hecke_rank(const HeckeSymmetry& R, int scan_limit) {
    for (int k = 2; k <= scan_limit; ++k) {
        if (antisymmetrizer(R, k).rank() == 0) return k - 1;
    }
    throw Error("hecke_rank: no vanishing antisymmetrizer up to the scan limit");
}

} // namespace qre
