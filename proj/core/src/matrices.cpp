#include "tkmoves/matrices.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tkm {

IntMatrix IntMatrix::zero(int r, int c) {
    IntMatrix m;
    m.rows = r;
    m.cols = c;
    m.a.assign(r, std::vector<BigInt>(c, 0));
    return m;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (a[i][j] != a[j][i]) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m = zero(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.a[j][i] = a[i][j];
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix m = zero(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.a[i][j] = a[i][j] + o.a[i][j];
    return m;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m = zero(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.a[i][j] = -a[i][j];
    return m;
}

BigInt IntMatrix::det() const {
    if (rows != cols) throw std::invalid_argument("det needs a square matrix");
    int n = rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    std::vector<std::vector<BigInt>> m = a;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv == -1) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::string IntMatrix::json() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < rows; ++i) {
        if (i) out << ",";
        out << "[";
        for (int j = 0; j < cols; ++j) {
            if (j) out << ",";
            out << "\"" << a[i][j].str() << "\"";
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

std::vector<BigInt> SnfResult::nontrivial() const {
    std::vector<BigInt> out;
    for (const auto& d : factors)
        if (d != 1) out.push_back(d);
    return out;
}

std::vector<BigInt> SnfResult::mod_profile(const BigInt& k) const {
    std::vector<BigInt> out;
    for (const auto& d : factors) {
        BigInt g = boost::multiprecision::gcd(d, k);
        if (g != 1) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int SnfResult::zp_dimension(const BigInt& p) const {
    int dim = 0;
    for (const auto& d : factors)
        if (d % p == 0) ++dim;  // zero factors count too: 0 % p == 0
    return dim;
}

std::string SnfResult::json() const {
    std::ostringstream out;
    out << "{\"factors\":[";
    for (size_t i = 0; i < factors.size(); ++i)
        out << (i ? "," : "") << "\"" << factors[i].str() << "\"";
    out << "],\"rank_deficiency\":" << rank_deficiency << "}";
    return out.str();
}

SnfResult smith_normal_form(const IntMatrix& mat) {
    std::vector<std::vector<BigInt>> m = mat.a;
    int rows = mat.rows, cols = mat.cols;
    int r = 0;  // current pivot index
    int limit = std::min(rows, cols);
    std::vector<BigInt> diag;

    auto abs_val = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };

    while (r < limit) {
        // smallest nonzero |entry| in the remaining block
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = r; i < rows; ++i)
            for (int j = r; j < cols; ++j)
                if (m[i][j] != 0 && (pi == -1 || abs_val(m[i][j]) < best)) {
                    best = abs_val(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi == -1) break;
        std::swap(m[r], m[pi]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][r], m[i][pj]);

        bool reduced = false;
        while (!reduced) {
            reduced = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][r] == 0) continue;
                BigInt q = m[i][r] / m[r][r];
                for (int j = r; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][r] != 0) {
                    std::swap(m[r], m[i]);  // remainder is smaller: iterate
                    reduced = false;
                }
            }
            for (int j = r + 1; j < cols; ++j) {
                if (m[r][j] == 0) continue;
                BigInt q = m[r][j] / m[r][r];
                for (int i = r; i < rows; ++i) m[i][j] -= q * m[i][r];
                if (m[r][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][r], m[i][j]);
                    reduced = false;
                }
            }
        }
        diag.push_back(abs_val(m[r][r]));
        ++r;
    }

    // Enforce the divisibility chain by gcd/lcm absorption.
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
        for (size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[j] % diag[i] != 0) {
                BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
                BigInt l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    SnfResult out;
    out.factors = diag;
    out.rank_deficiency = limit - static_cast<int>(diag.size());
    for (int i = 0; i < out.rank_deficiency; ++i) out.factors.push_back(0);
    return out;
}

namespace {

// Quadrant s of a crossing (between slots s and s+1) is swept by the face
// that arrives at slot s; returns that face index.
int quadrant_face(const LinkDiagram& d, int ci, int s) {
    int e = d.crossings[ci].e[s];
    const EdgeInfo& info = d.edge(e);
    bool arrives_forward = info.head.crossing == ci && info.head.slot == s;
    return d.face_of(FaceSide{e, arrives_forward});
}

struct Checkerboard {
    std::vector<int> color;        // per face: 0 white, 1 black
    std::vector<int> white_index;  // per face: index among white regions, -1
    int n_white = 0;               // indexed white regions (outer excluded)
    int outer = 0;                 // outer face id
};

Checkerboard checkerboard(const LinkDiagram& d,
                          std::optional<FaceSide> white_outer = std::nullopt) {
    const auto& faces = d.faces();
    Checkerboard cb;
    cb.color.assign(faces.size(), -1);
    cb.white_index.assign(faces.size(), -1);
    if (faces.empty()) return cb;
    // Two-colour from face 0.  Without a seed the larger colour class is
    // white and its lowest face unbounded (ties keep face 0 white); a PD
    // code fixes the embedding only up to the point at infinity, so the
    // choice is a convention.  A seed pins the white unbounded region.
    std::vector<int> stack{0};
    cb.color[0] = 0;
    int count0 = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (const auto& side : faces[f]) {
            int g = d.face_of(FaceSide{side.edge, !side.forward});
            if (cb.color[g] == -1) {
                cb.color[g] = 1 - cb.color[f];
                count0 += cb.color[g] == 0;
                stack.push_back(g);
            } else if (cb.color[g] == cb.color[f]) {
                throw std::logic_error("diagram is not checkerboard colourable");
            }
        }
    }
    int outer = -1;
    if (white_outer) {
        outer = d.face_of(*white_outer);
        if (cb.color[outer] != 0)
            for (auto& c : cb.color) c = 1 - c;
    } else {
        if (2 * count0 < static_cast<int>(faces.size())) {
            for (auto& c : cb.color) c = 1 - c;
        }
        for (size_t f = 0; f < faces.size() && outer == -1; ++f)
            if (cb.color[f] == 0) outer = static_cast<int>(f);
    }
    cb.outer = outer;
    for (size_t f = 0; f < faces.size(); ++f) {
        if (cb.color[f] != 0 || static_cast<int>(f) == outer) continue;
        cb.white_index[f] = cb.n_white++;
    }
    return cb;
}

// Incidence sign of a crossing: -1 when the white quadrants are the pair
// meeting the incoming under-strand (slots 0-1 and 2-3), +1 otherwise.
int eta(const LinkDiagram& d, const Checkerboard& cb, int ci, bool& white02) {
    int q0 = quadrant_face(d, ci, 0);
    int q1 = quadrant_face(d, ci, 1);
    int q2 = quadrant_face(d, ci, 2);
    int q3 = quadrant_face(d, ci, 3);
    if (cb.color[q0] != cb.color[q2] || cb.color[q1] != cb.color[q3] ||
        cb.color[q0] == cb.color[q1])
        throw std::logic_error("checkerboard colouring inconsistent at a crossing");
    white02 = cb.color[q0] == 0;
    return white02 ? -1 : 1;
}

void require_connected(const LinkDiagram& d, const char* what) {
    if (!d.is_connected())
        throw std::invalid_argument(std::string(what) +
                                    ": diagram is disconnected; split it into connected "
                                    "summands first");
}

}  // namespace

IntMatrix goeritz_matrix(const LinkDiagram& d, std::optional<FaceSide> white_outer) {
    require_connected(d, "goeritz_matrix");
    if (d.crossings.empty()) return IntMatrix::zero(0, 0);
    Checkerboard cb = checkerboard(d, white_outer);
    IntMatrix g = IntMatrix::zero(cb.n_white, cb.n_white);
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        bool white02 = false;
        int s = eta(d, cb, static_cast<int>(ci), white02);
        int fa = quadrant_face(d, ci, white02 ? 0 : 1);
        int fb = quadrant_face(d, ci, white02 ? 2 : 3);
        if (fa == fb) continue;  // both white corners in one region
        int i = cb.white_index[fa], j = cb.white_index[fb];
        if (i >= 0 && j >= 0) {
            g.a[i][j] += s;
            g.a[j][i] += s;
        }
        if (i >= 0) g.a[i][i] -= s;
        if (j >= 0) g.a[j][j] -= s;
    }
    if (!g.is_symmetric()) throw std::logic_error("Goeritz matrix came out asymmetric");
    return g;
}

int mu_correction(const LinkDiagram& d, std::optional<FaceSide> white_outer) {
    require_connected(d, "mu_correction");
    if (d.crossings.empty()) return 0;
    Checkerboard cb = checkerboard(d, white_outer);
    int mu = 0;
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        bool white02 = false;
        int s = eta(d, cb, static_cast<int>(ci), white02);
        // type II crossings are those whose white-respecting smoothing is the
        // disoriented one; they enter mu against the incidence sign.
        bool type2 = d.crossings[ci].over_in_3 == white02;
        if (type2) mu -= s;
    }
    return mu;
}

namespace {

SignatureValue classify_hermitian(const Eigen::MatrixXcd& m) {
    if (m.rows() == 0) return {0, 0};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue solve failed");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    double tol = 1e-9 * scale;
    SignatureValue out;
    for (int i = 0; i < m.rows(); ++i) {
        double l = es.eigenvalues()[i];
        if (std::abs(l) <= tol)
            out.nullity++;
        else
            out.signature += l > 0 ? 1 : -1;
    }
    return out;
}

Eigen::MatrixXcd tl_matrix(const IntMatrix& v, Complex xi) {
    int n = v.rows;
    Eigen::MatrixXcd m(n, n);
    Complex c1 = 1.0 - std::conj(xi), c2 = 1.0 - xi;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = c1 * v.a[i][j].convert_to<double>() + c2 * v.a[j][i].convert_to<double>();
    return m;
}

SnfResult branched_cover_connected(const LinkDiagram& d, int s);

}  // namespace

SnfResult branched_cover_homology(const LinkDiagram& d, int s) {
    if (s < 2 || s > 6) throw std::invalid_argument("branched cover order s must be in [2, 6]");
    auto pieces = d.split_components();
    if (pieces.size() <= 1) return branched_cover_connected(d, s);
    SnfResult merged;
    std::vector<BigInt> torsion;
    int free_rank = (s - 1) * (static_cast<int>(pieces.size()) - 1);
    for (const auto& piece : pieces) {
        SnfResult h = branched_cover_connected(piece, s);
        for (const auto& f : h.factors) {
            if (f == 0)
                ++free_rank;
            else if (f != 1)
                torsion.push_back(f);
        }
    }
    // Renormalize the direct sum into a divisibility chain.
    IntMatrix diag = IntMatrix::zero(static_cast<int>(torsion.size()),
                                     static_cast<int>(torsion.size()));
    for (size_t i = 0; i < torsion.size(); ++i) diag.a[i][i] = torsion[i];
    merged = smith_normal_form(diag);
    merged.rank_deficiency += free_rank;
    for (int i = 0; i < free_rank; ++i) merged.factors.push_back(0);
    return merged;
}

namespace {

IntMatrix seifert_blocks(const IntMatrix& v, int s) {
    int r = v.rows;
    int n = (s - 1) * r;
    IntMatrix m = IntMatrix::zero(n, n);
    IntMatrix sym = v + v.transpose();
    for (int b = 0; b < s - 1; ++b) {
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                m.a[b * r + i][b * r + j] = sym.a[i][j];
                if (b + 1 < s - 1) {
                    m.a[b * r + i][(b + 1) * r + j] = -v.a[j][i];  // -V^T above
                    m.a[(b + 1) * r + i][b * r + j] = -v.a[i][j];  // -V below
                }
            }
        }
    }
    return m;
}

SnfResult branched_cover_connected(const LinkDiagram& d, int s) {
    IntMatrix v = seifert_matrix(d);
    SnfResult from_v = smith_normal_form(seifert_blocks(v, s));
    if (s == 2) {
        SnfResult from_g = smith_normal_form(goeritz_matrix(d));
        if (from_g.nontrivial() != from_v.nontrivial())
            throw std::logic_error(
                "Goeritz and Seifert presentations of the double cover disagree");
    }
    return from_v;
}

}  // namespace

SignatureValue signature(const LinkDiagram& d) {
    auto pieces = d.split_components();
    if (pieces.size() > 1) {
        SignatureValue total{0, 0};
        for (const auto& piece : pieces) {
            SignatureValue s = signature(piece);
            total.signature += s.signature;
            total.nullity += s.nullity;
        }
        total.nullity += static_cast<int>(pieces.size()) - 1;
        return total;
    }
    IntMatrix v = seifert_matrix(d);
    SignatureValue from_v = classify_hermitian(tl_matrix(v, Complex(0, 0)));
    IntMatrix g = goeritz_matrix(d);
    Eigen::MatrixXcd gm(g.rows, g.rows);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.rows; ++j) gm(i, j) = g.a[i][j].convert_to<double>();
    SignatureValue from_g = classify_hermitian(gm);
    int gl = from_g.signature - mu_correction(d);
    if (gl != from_v.signature)
        throw std::logic_error("Goeritz+mu and Seifert signatures disagree (" +
                               std::to_string(gl) + " vs " +
                               std::to_string(from_v.signature) + ")");
    return from_v;
}

SignatureValue tristram_levine(const LinkDiagram& d, Complex xi) {
    if (std::abs(xi - Complex(1, 0)) < 1e-12)
        throw std::invalid_argument("tristram_levine: xi = 1 is excluded");
    IntMatrix v = seifert_matrix(d);
    Eigen::MatrixXcd m = tl_matrix(v, xi);
    SignatureValue out = classify_hermitian(m);
    if (out.nullity > 0 && m.rows() > 0) {
        double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
        double bound = std::pow(1e-9 * scale, out.nullity) *
                       std::pow(scale * m.rows(), m.rows() - out.nullity);
        if (std::abs(m.determinant()) > bound)
            throw std::runtime_error(
                "tristram_levine: eigenvalue near zero but determinant bound violated; "
                "result indeterminate");
    }
    return out;
}

Complex tl_determinant(const LinkDiagram& d, Complex xi) {
    IntMatrix v = seifert_matrix(d);
    Eigen::MatrixXcd m = tl_matrix(v, xi);
    if (m.rows() == 0) return Complex(1, 0);
    return (Complex(0, 1) * m).determinant();
}

}  // namespace tkm
