#include "hyperred/difference_space.hpp"

#include <map>
#include <vector>

namespace hyperred {

SpaceInfo analyze(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw ZeroInputError("analyze: a and b must be nonzero");
    SpaceInfo info;
    info.a = a;
    info.b = b;
    info.u = a - shift(b, Rat(-1));
    info.d = std::max(info.u.degree(), a.degree() - 1);
    if (!info.u.is_zero() && info.u.degree() == a.degree() - 1) {
        info.m0 = -info.u.lc() / a.lc();
        info.degenerate = is_integer(*info.m0) && sgn(*info.m0) >= 0;
    }
    return info;
}

Poly image_of(const SpaceInfo& info, const Poly& x) {
    return info.a * shift(x, Rat(1)) - shift(info.b, Rat(-1)) * x;
}

namespace {

// True when the image of k^s has full degree d + s, i.e. the leading term
// of a polynomial of degree d + s can be eliminated with it.
bool step_reaches(const SpaceInfo& info, int s) {
    if (s == 0) return info.u.degree() == info.d;
    if (info.degenerate && Rat(s) == *info.m0) return false;
    return true;
}

}  // namespace

ReductionCertificate reduce(const SpaceInfo& info, const Poly& f) {
    Poly p = f;
    Poly x;
    std::map<int, Rat> aside;
    while (!p.is_zero() && p.degree() >= info.d) {
        const int m = p.degree();
        const int s = m - info.d;
        if (!step_reaches(info, s)) {
            aside.emplace(m, p.lc());
            p -= Poly::monomial(m, p.lc());
            continue;
        }
        const Poly ps = image_of(info, Poly::monomial(s));
        if (ps.degree() != m) throw Error("reduce: image degree law violated");
        const Rat c = p.lc() / ps.lc();
        x += Poly::monomial(s, c);
        p -= c * ps;
    }
    Poly h = p;
    for (const auto& [e, c] : aside) h += Poly::monomial(e, c);
    return ReductionCertificate{h, x, Rat(1)};
}

VerificationReport verify_certificate(const SpaceInfo& info, const Poly& f,
                                      const ReductionCertificate& cert) {
    VerificationReport report;
    report.residual = cert.scale * f - cert.h - image_of(info, cert.x);
    report.pass = report.residual.is_zero();
    return report;
}

std::set<int> reduced_support(const SpaceInfo& info) {
    std::set<int> support;
    for (int i = 0; i < info.d; ++i) support.insert(i);
    if (info.d >= 0 && info.u.degree() != info.d) support.insert(info.d);
    if (info.degenerate) {
        const Rat top = Rat(info.d) + *info.m0;
        if (!top.get_num().fits_sint_p()) throw Error("degeneration index too large");
        support.insert(static_cast<int>(top.get_num().get_si()));
    }
    return support;
}

namespace {

// Gauss-Jordan over exact rationals; any one solution, free variables zero.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> mat,
                                             std::vector<Rat> rhs) {
    const size_t rows = mat.size();
    const size_t cols = rows == 0 ? 0 : mat[0].size();
    std::vector<int> pivot_col_of_row(rows, -1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && sgn(mat[pivot][col]) == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(mat[pivot], mat[row]);
        std::swap(rhs[pivot], rhs[row]);
        const Rat inv = Rat(1) / mat[row][col];
        for (size_t j = col; j < cols; ++j) mat[row][j] *= inv;
        rhs[row] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || sgn(mat[i][col]) == 0) continue;
            const Rat factor = mat[i][col];
            for (size_t j = col; j < cols; ++j) mat[i][j] -= factor * mat[row][j];
            rhs[i] -= factor * rhs[row];
        }
        pivot_col_of_row[row] = static_cast<int>(col);
        ++row;
    }
    for (size_t i = row; i < rows; ++i)
        if (sgn(rhs[i]) != 0) return std::nullopt;
    std::vector<Rat> solution(cols, Rat(0));
    for (size_t i = 0; i < row; ++i)
        solution[static_cast<size_t>(pivot_col_of_row[i])] = rhs[i];
    return solution;
}

std::optional<ReductionCertificate> oracle_attempt(const SpaceInfo& info, const Poly& f,
                                                   const std::set<int>& support, int bound) {
    std::vector<Poly> witness_images;
    witness_images.reserve(static_cast<size_t>(bound) + 1);
    int max_deg = std::max(f.degree(), 0);
    for (int s = 0; s <= bound; ++s) {
        witness_images.push_back(image_of(info, Poly::monomial(s)));
        max_deg = std::max(max_deg, witness_images.back().degree());
    }
    for (int e : support) max_deg = std::max(max_deg, e);

    const size_t rows = static_cast<size_t>(max_deg) + 1;
    const size_t witness_cols = static_cast<size_t>(bound) + 1;
    const size_t cols = witness_cols + support.size();
    std::vector<std::vector<Rat>> mat(rows, std::vector<Rat>(cols, Rat(0)));
    std::vector<Rat> rhs(rows, Rat(0));
    for (int i = 0; i <= f.degree() && i >= 0; ++i) rhs[static_cast<size_t>(i)] = f.coeff(i);
    for (size_t s = 0; s < witness_cols; ++s)
        for (int i = 0; i <= witness_images[s].degree() && i >= 0; ++i)
            mat[static_cast<size_t>(i)][s] = witness_images[s].coeff(i);
    size_t col = witness_cols;
    for (int e : support) mat[static_cast<size_t>(e)][col++] = Rat(1);

    auto solution = solve_linear(std::move(mat), std::move(rhs));
    if (!solution) return std::nullopt;
    std::vector<Rat> x_coeffs(solution->begin(), solution->begin() + static_cast<long>(witness_cols));
    ReductionCertificate cert;
    cert.x = Poly(std::move(x_coeffs));
    col = witness_cols;
    for (int e : support) cert.h += Poly::monomial(e, (*solution)[col++]);
    cert.scale = Rat(1);
    if (!verify_certificate(info, f, cert).pass)
        throw Error("oracle_reduce: solver produced an invalid certificate");
    return cert;
}

}  // namespace

std::optional<ReductionCertificate> oracle_reduce(const SpaceInfo& info, const Poly& f,
                                                  const std::set<int>& support,
                                                  std::optional<int> degree_bound) {
    // deg f is generous whenever d >= 0; d == -1 shifts image degrees down
    // by one, so the witness may need one degree more than f has.
    const int fallback =
        f.is_zero() ? 0 : std::max({f.degree(), f.degree() - info.d, 0});
    const int bound = degree_bound.value_or(fallback);
    auto cert = oracle_attempt(info, f, support, bound);
    if (cert || !info.degenerate) return cert;
    // Degenerate pairs may need the extra m0 degrees of witness.
    if (!info.m0->get_num().fits_sint_p()) return std::nullopt;
    const int gap = static_cast<int>(info.m0->get_num().get_si());
    return oracle_attempt(info, f, support, bound + gap);
}

}  // namespace hyperred
