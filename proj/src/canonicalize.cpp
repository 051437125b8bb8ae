#include <algorithm>
#include <cmath>
#include <random>

#include "rcanon/canon.hpp"
#include "rcanon/errors.hpp"
#include "rcanon/instance.hpp"

namespace rcanon {

namespace {

struct Piece {
    CanonicalBlock block;
    Mat columns;
};

Mat gram(const Mat& v, const Mat& f, const Mat& w, InvolutionTag inv) { return st_transpose(v, inv) * f * w; }

Scalar form(const Mat& u, const Mat& g, const Mat& w, InvolutionTag inv) { return gram(u, g, w, inv)(0, 0); }

double norm2(const Mat& u) {
    const double n = u.norm();
    return n * n;
}

Mat unit(std::size_t d, std::size_t k) {
    Mat e(d, 1);
    e(k, 0) = 1.0;
    return e;
}

Scalar random_scalar(FieldTag field, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    switch (field) {
    case FieldTag::R: return normal(rng);
    case FieldTag::C: return {normal(rng), normal(rng)};
    case FieldTag::H: break;
    }
    return {normal(rng), normal(rng), normal(rng), normal(rng)};
}

/// Orthogonalizes a definite-capable form g: returns T with
/// T^st g T = diag(values). `normalize(c)` rescales a vector with form value c.
template <typename Normalize>
Mat deflate(const Mat& g, InvolutionTag inv, FieldTag coeffs, Normalize normalize, double eps,
            std::vector<FormScalar>& labels) {
    const std::size_t d = g.rows();
    std::vector<Mat> rest;
    for (std::size_t k = 0; k < d; ++k)
        rest.push_back(unit(d, k));
    std::vector<Mat> done;
    const double floor = eps * std::max(g.norm(), 1e-300);
    std::mt19937_64 rng(0x5eedULL + d);
    std::vector<Scalar> mixers{1.0, kI};
    if (coeffs == FieldTag::H) {
        mixers.push_back(kJ);
        mixers.push_back(kK);
    }
    auto strength = [&](const Mat& u) { return form(u, g, u, inv).abs() / norm2(u); };

    while (!rest.empty()) {
        Mat pick;
        std::size_t drop = 0;
        double best = floor;
        for (std::size_t p = 0; p < rest.size(); ++p)
            if (double s = strength(rest[p]); s > best) {
                best = s;
                pick = rest[p];
                drop = p;
            }
        if (pick.rows() == 0)
            for (std::size_t p = 0; p < rest.size(); ++p)
                for (std::size_t q = p + 1; q < rest.size(); ++q)
                    for (const auto& m : mixers) {
                        Mat u = rest[p] + rest[q] * m;
                        if (double s = strength(u); s > best) {
                            best = s;
                            pick = std::move(u);
                            drop = p;
                        }
                    }
        for (int trial = 0; pick.rows() == 0 && trial < 64; ++trial) {
            Mat u(d, 1);
            double largest = 0.0;
            for (std::size_t p = 0; p < rest.size(); ++p) {
                const Scalar a = random_scalar(coeffs, rng);
                u += rest[p] * a;
                if (a.abs() > largest) {
                    largest = a.abs();
                    drop = p;
                }
            }
            if (strength(u) > floor)
                pick = std::move(u);
        }
        if (pick.rows() == 0)
            throw DeflationStall("no vector with nonzero form value in a residual space of dimension " +
                                 std::to_string(rest.size()));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));

        const Normalization nz = normalize(form(pick, g, pick, inv));
        Mat u = pick * nz.q;
        const Scalar cinv = form(u, g, u, inv).inverse();
        for (auto& b : rest)
            b -= u * (cinv * form(u, g, b, inv));
        done.push_back(std::move(u));
        labels.push_back(nz.target);
    }
    return hcat(done);
}

/// Complex congruence of a symmetric matrix to target * I.
CMatrix symmetric_to(const CMatrix& c, Complex target, double eps) {
    std::vector<FormScalar> labels;
    auto normalize = [target](const Scalar& v) {
        return Normalization{FormScalar::PlusOne, Scalar(std::sqrt(target / v.z1()))};
    };
    return deflate(Mat::from_complex(c), InvolutionTag::Identity, FieldTag::C, normalize, eps, labels).to_complex();
}

/// T with T^* h T = diag(signs) for a nonsingular Hermitian h.
template <typename M>
M hermitian_normalize(const M& h, std::vector<int>& signs, double eps) {
    const M hs = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<M> es(hs);
    const auto& ev = es.eigenvalues();
    const double scale = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
    M t = es.eigenvectors();
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        if (!(std::abs(ev(k)) > eps * scale))
            throw DeflationStall("degenerate Hermitian form on an eigenspace");
        t.col(k) /= std::sqrt(std::abs(ev(k)));
        signs.push_back(ev(k) > 0 ? 1 : -1);
    }
    return t;
}

/// T with columns (u1, w1, u2, w2, ...) and u_k^T c w_k = t for a skew
/// complex matrix c; all other pairings vanish.
CMatrix symplectic_pairs(const CMatrix& c, Complex t, double eps) {
    const Eigen::Index d = c.rows();
    if (d % 2 != 0)
        throw DeflationStall("skew form on an odd-dimensional space");
    std::vector<Eigen::VectorXcd> rest;
    for (Eigen::Index k = 0; k < d; ++k)
        rest.push_back(Eigen::VectorXcd::Unit(d, k));
    const double floor = eps * std::max(c.norm(), 1e-300);
    auto beta = [&](const Eigen::VectorXcd& u, const Eigen::VectorXcd& w) { return (u.transpose() * c * w)(0, 0); };
    CMatrix out(d, d);
    Eigen::Index filled = 0;
    while (!rest.empty()) {
        std::size_t bp = 0, bq = 0;
        double best = floor;
        for (std::size_t p = 0; p < rest.size(); ++p)
            for (std::size_t q = p + 1; q < rest.size(); ++q) {
                const double s = std::abs(beta(rest[p], rest[q])) / (rest[p].norm() * rest[q].norm());
                if (s > best) {
                    best = s;
                    bp = p;
                    bq = q;
                }
            }
        if (bq == 0)
            throw DeflationStall("skew form degenerates on a residual space of dimension " +
                                 std::to_string(rest.size()));
        const Eigen::VectorXcd u = rest[bp];
        const Eigen::VectorXcd w = rest[bq] * (t / beta(u, rest[bq]));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(bq));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(bp));
        for (auto& b : rest) {
            const Complex along_w = beta(u, b) / t;
            const Complex along_u = -beta(w, b) / t;
            b -= u * along_u + w * along_w;
        }
        out.col(filled++) = u;
        out.col(filled++) = w;
    }
    return out;
}

/// [Re v, -Im v] for each complex column v.
Mat realified_columns(const Mat& v) {
    Mat out(v.rows(), 2 * v.cols());
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) {
            out(i, 2 * j) = v(i, j).a;
            out(i, 2 * j + 1) = -v(i, j).b;
        }
    return out;
}

Mat conj_entries(const Mat& v) {
    Mat out = v;
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j)
            out(i, j) = Scalar(std::conj(v(i, j).z1()));
    return out;
}

/// W' = W G^{-1} target with G = V^st F W complex (the coupling of two
/// eigenspaces), so that V^st F W' = target I.
Mat couple(const Mat& v, const Mat& w, const Mat& f, InvolutionTag inv, Complex target) {
    const CMatrix g = gram(v, f, w, inv).to_complex();
    Eigen::FullPivLU<CMatrix> lu(g);
    if (!lu.isInvertible())
        throw PairingDimensionMismatch("paired eigenspaces are degenerate under the form");
    return w * Mat::from_complex(lu.inverse() * target);
}

FormScalar sign_scalar(int s) { return s > 0 ? FormScalar::PlusOne : FormScalar::MinusOne; }
FormScalar sign_i_scalar(int s) { return s > 0 ? FormScalar::PlusI : FormScalar::MinusI; }

void complex_pieces(const SpectralDecomposition& sd, const Mat& f, CaseTag c, const CanonOptions& o,
                    std::vector<Piece>& out) {
    const InvolutionTag inv = involution_of(c.kind);
    for (const auto& e : sd.report().entries) {
        const EigIndex x = e.index;
        const EigIndex y = pairing_image(x, c);
        if (y == x) {
            const Mat v = sd.eigenbasis(x);
            const Mat g = gram(v, f, v, inv);
            if (c.kind == CaseKind::a1) {
                const Mat w = v * Mat::from_complex(symmetric_to(g.to_complex(), 1.0, o.eps_deflate));
                for (std::size_t k = 0; k < w.cols(); ++k)
                    out.push_back({CanonicalBlock::one(x, FormScalar::PlusOne), w.col(k)});
            } else if (c.kind == CaseKind::a2) {
                std::vector<int> signs;
                const Mat w = v * Mat::from_complex(hermitian_normalize<CMatrix>(g.to_complex(), signs, o.eps_rank));
                for (std::size_t k = 0; k < w.cols(); ++k)
                    out.push_back({CanonicalBlock::one(x, sign_scalar(signs[k])), w.col(k)});
            } else {
                const Mat w = v * Mat::from_complex(symplectic_pairs(g.to_complex(), 1.0, o.eps_deflate));
                for (std::size_t k = 0; k < w.cols(); k += 2)
                    out.push_back({CanonicalBlock::two(x, PartnerRule::PowR, x, -1), w.cols_range(k, 2)});
            }
        } else if (x < y) {
            const Mat v = sd.eigenbasis(x);
            const Mat w = couple(v, sd.eigenbasis(y), f, inv, 1.0);
            const PartnerRule rule = c.kind == CaseKind::a2 ? PartnerRule::ConjPowR : PartnerRule::PowR;
            const int off = c.kind == CaseKind::a3 ? -1 : 1;
            for (std::size_t k = 0; k < v.cols(); ++k) {
                const Mat cols[] = {v.col(k), w.col(k)};
                out.push_back({CanonicalBlock::two(x, rule, y, off), hcat(cols)});
            }
        }
    }
}

void real_pieces(const SpectralDecomposition& sd, const Mat& f, CaseTag c, const CanonOptions& o,
                 std::vector<Piece>& out) {
    const bool skew = c.kind == CaseKind::b2;
    const InvolutionTag bil = InvolutionTag::Identity;
    for (const auto& e : sd.report().entries) {
        const EigIndex x = e.index;
        if (x.is_real()) {
            const Mat v = sd.eigenbasis(x);
            const Mat g = gram(v, f, v, bil);
            if (!skew) {
                std::vector<int> signs;
                const Mat w = v * Mat::from_real(hermitian_normalize<RMatrix>(g.to_real(), signs, o.eps_rank));
                for (std::size_t k = 0; k < w.cols(); ++k)
                    out.push_back({CanonicalBlock::one(x, sign_scalar(signs[k])), w.col(k)});
            } else {
                const CMatrix t = symplectic_pairs(g.to_complex(), -1.0, o.eps_deflate);
                const Mat w = v * Mat::from_real(t.real());
                for (std::size_t k = 0; k < w.cols(); k += 2)
                    out.push_back({CanonicalBlock::two(x, PartnerRule::PowR, x, -1), w.cols_range(k, 2)});
            }
            continue;
        }
        if (x != orbit_rep(x, c))
            continue;
        const SelfPairing sp = self_pairing(x, c.r);
        const Mat v = sd.eigenbasis(x);
        if (sp.pow_fixed) {
            const CMatrix beta = gram(v, f, v, bil).to_complex();
            if (!skew) {
                const Mat w = v * Mat::from_complex(symmetric_to(beta, Complex(0.0, -2.0), o.eps_deflate));
                for (std::size_t k = 0; k < w.cols(); ++k)
                    out.push_back({CanonicalBlock::two(x, PartnerRule::PowR, x, 1, true), realified_columns(w.col(k))});
            } else {
                const Mat w = v * Mat::from_complex(symplectic_pairs(beta, -2.0, o.eps_deflate));
                const EigIndex partner = idx_conj(x);
                for (std::size_t k = 0; k < w.cols(); k += 2) {
                    const Mat cols[] = {realified_columns(w.col(k)), realified_columns(conj_entries(w.col(k + 1)))};
                    out.push_back({CanonicalBlock::two(x, PartnerRule::ConjPowR, partner, -1, true), hcat(cols)});
                }
            }
        } else if (sp.conj_pow_fixed) {
            CMatrix h = gram(v, f, v, InvolutionTag::ComplexConj).to_complex();
            if (skew)
                h *= Complex(0.0, -1.0);
            std::vector<int> signs;
            const Mat w = v * Mat::from_complex(hermitian_normalize<CMatrix>(h, signs, o.eps_rank) * std::sqrt(2.0));
            for (std::size_t k = 0; k < w.cols(); ++k)
                out.push_back({CanonicalBlock::one(x, sign_scalar(signs[k]), true), realified_columns(w.col(k))});
        } else {
            const EigIndex partner = idx_conj(idx_pow_r(x, c.r));
            const Mat w = couple(v, sd.eigenbasis(partner), f, InvolutionTag::ComplexConj, skew ? -2.0 : 2.0);
            for (std::size_t k = 0; k < v.cols(); ++k) {
                const Mat cols[] = {realified_columns(v.col(k)), realified_columns(w.col(k))};
                out.push_back(
                    {CanonicalBlock::two(x, PartnerRule::ConjPowR, partner, skew ? -1 : 1, true), hcat(cols)});
            }
        }
    }
}

void quaternion_pieces(const SpectralDecomposition& sd, const Mat& f, CaseTag c, const CanonOptions& o,
                       std::vector<Piece>& out) {
    const InvolutionTag inv = involution_of(c.kind);
    const bool skew = epsilon_of(c.kind) < 0;
    for (const auto& e : sd.report().entries) {
        const EigIndex x = e.index;
        const Mat v = sd.eigenbasis(x);
        if (x.is_real()) {
            std::vector<FormScalar> labels;
            auto normalize = [&](const Scalar& s) { return scalar_orbit_normalize(s, RescaleConstraint::FullH, c.kind); };
            const Mat w = v * deflate(gram(v, f, v, inv), inv, FieldTag::H, normalize, o.eps_deflate, labels);
            for (std::size_t k = 0; k < w.cols(); ++k)
                out.push_back({CanonicalBlock::one(x, labels[k]), w.col(k)});
            continue;
        }
        if (x != orbit_rep(x, c))
            continue;
        const SelfPairing sp = self_pairing(x, c.r);
        if (sp.conj_pow_fixed) {
            CMatrix h = gram(v, f, v, inv).to_complex();
            if (skew)
                h *= Complex(0.0, -1.0);
            std::vector<int> signs;
            const Mat w = v * Mat::from_complex(hermitian_normalize<CMatrix>(h, signs, o.eps_rank));
            for (std::size_t k = 0; k < w.cols(); ++k)
                out.push_back({CanonicalBlock::one(x, skew ? sign_i_scalar(signs[k]) : sign_scalar(signs[k])), w.col(k)});
        } else if (sp.pow_fixed) {
            // The form takes values in C j here: V^st F V = C j.
            const Mat g = gram(v, f, v, inv);
            CMatrix cj(g.rows(), g.cols());
            for (std::size_t i = 0; i < g.rows(); ++i)
                for (std::size_t j = 0; j < g.cols(); ++j)
                    cj(i, j) = g(i, j).z2();
            if (c.kind == CaseKind::c2 || c.kind == CaseKind::c3) {
                const Mat w = v * Mat::from_complex(symmetric_to(cj, 1.0, o.eps_deflate).conjugate());
                for (std::size_t k = 0; k < w.cols(); ++k)
                    out.push_back({CanonicalBlock::one(x, FormScalar::PlusJ), w.col(k)});
            } else {
                const double t = c.kind == CaseKind::c1 ? -1.0 : 1.0;
                const Mat w = v * Mat::from_complex(symplectic_pairs(cj, t, o.eps_deflate).conjugate());
                const EigIndex partner = idx_conj(x);
                for (std::size_t k = 0; k < w.cols(); k += 2) {
                    const Mat cols[] = {w.col(k), w.col(k + 1) * kJ};
                    out.push_back({CanonicalBlock::two(x, PartnerRule::ConjPowR, partner, c.kind == CaseKind::c1 ? 1 : -1),
                                   hcat(cols)});
                }
            }
        } else {
            const EigIndex partner = idx_conj(idx_pow_r(x, c.r));
            const Mat w = couple(v, sd.eigenbasis(partner), f, inv, skew ? -1.0 : 1.0);
            for (std::size_t k = 0; k < v.cols(); ++k) {
                const Mat cols[] = {v.col(k), w.col(k)};
                out.push_back({CanonicalBlock::two(x, PartnerRule::ConjPowR, partner, skew ? -1 : 1), hcat(cols)});
            }
        }
    }
}

bool close(const Mat& x, const Mat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        return false;
    return (x - y).norm() <= 1e-14 * std::max(1.0, x.norm());
}

double relative(double num, double den) { return den > 0.0 ? num / den : num; }

} // namespace

Canonicalization canonicalize(const Mat& a, const Mat& f, CaseTag c, CanonOptions options) {
    require_exponent(c.r);
    const FieldTag field = field_of(c.kind);
    const SpectralDecomposition sd(a, field, c.r, {options.snap_tol, options.eps_rank});
    const SpectrumReport& rep = sd.report();
    for (const auto& e : rep.entries) {
        const EigIndex y = pairing_image(e.index, c);
        if (rep.multiplicity(y) != e.multiplicity)
            throw PairingDimensionMismatch("eigenvalue " + e.index.to_string() + " has multiplicity " +
                                           std::to_string(e.multiplicity) + " but its partner " + y.to_string() +
                                           " has " + std::to_string(rep.multiplicity(y)));
    }

    std::vector<Piece> pieces;
    switch (field) {
    case FieldTag::C: complex_pieces(sd, f, c, options, pieces); break;
    case FieldTag::R: real_pieces(sd, f, c, options, pieces); break;
    case FieldTag::H: quaternion_pieces(sd, f, c, options, pieces); break;
    }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& x, const Piece& y) { return block_less(x.block, y.block); });

    Canonicalization out;
    out.form.case_tag = c;
    std::vector<Mat> columns;
    for (auto& p : pieces) {
        out.form.blocks.push_back(p.block);
        columns.push_back(std::move(p.columns));
    }
    const auto [a_can, f_can] = block_matrices(out.form);
    if (static_cast<std::size_t>(out.form.dimension()) != a.rows())
        throw PairingDimensionMismatch("blocks cover " + std::to_string(out.form.dimension()) + " of " +
                                       std::to_string(a.rows()) + " dimensions");

    TransformWitness& wit = out.witness;
    wit.s = close(a, a_can) && close(f, f_can) ? Mat::identity(a.rows()) : hcat(columns);
    const InvolutionTag inv = involution_of(c.kind);
    wit.residual_similarity = relative((inverse(wit.s) * a * wit.s - a_can).norm(), a.norm());
    wit.residual_congruence = relative((st_transpose(wit.s, inv) * f * wit.s - f_can).norm(), f.norm());
    if (!(wit.residual_similarity <= options.witness_tol) || !(wit.residual_congruence <= options.witness_tol))
        throw WitnessError("witness residuals " + std::to_string(wit.residual_similarity) + " / " +
                           std::to_string(wit.residual_congruence) + " exceed " +
                           std::to_string(options.witness_tol));
    return out;
}

Canonicalization canonicalize(const MatrixPair& pair) {
    require_valid(pair);
    CanonOptions o;
    o.snap_tol = pair.tolerances.snap;
    o.eps_rank = pair.tolerances.rank;
    return canonicalize(pair.a, pair.f, pair.case_tag(), o);
}

} // namespace rcanon
