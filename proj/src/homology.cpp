#include "evasive/homology.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace evasive {

long long BettiTable::total_rank() const {
    long long t = 0;
    for (auto& [d, b] : betti) t += b;
    return t;
}

namespace {

// swaps + row/col elimination with pivoting on minimal absolute value,
// then divisibility fix-up so that d_1 | d_2 | ...
void snf_inplace(std::vector<std::vector<mpz_class>>& m, std::vector<mpz_class>& diag) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    while (true) {
        // locate pivot of minimal absolute value in the remaining block
        std::size_t pi = t, pj = t;
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                mpz_class a = abs(m[i][j]);
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                mpz_class f = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
                if (m[i][t] != 0) {  // remainder smaller than pivot, swap up and restart
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                mpz_class f = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(m[t][t]));
        ++t;
        if (t >= rows || t >= cols) break;
    }
    // enforce divisibility chain
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[j] % diag[i] == 0) continue;
            mpz_class g, l;
            mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
            l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    std::sort(diag.begin(), diag.end());
}

}  // namespace

std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> m) {
    std::vector<mpz_class> diag;
    snf_inplace(m, diag);
    return diag;
}

RelativeChainComplex relative_chain_complex(const Complex& a, const Complex& b) {
    for (Face f : b.faces)
        if (!a.contains(f)) throw std::invalid_argument("relative pair: B is not a subcomplex of A");
    RelativeChainComplex cc;
    for (Face f : a.faces)
        if (!b.contains(f)) cc.basis[face_card(f) - 1].push_back(f);
    std::map<int, std::map<Face, std::size_t>> index;
    for (auto& [d, fs] : cc.basis) {
        std::sort(fs.begin(), fs.end());
        for (std::size_t i = 0; i < fs.size(); ++i) index[d][fs[i]] = i;
    }

    // relative boundary of one face as a signed face chain
    auto face_boundary = [&](Face f, int d) {
        std::vector<std::pair<Face, int>> out;
        auto idx = face_indices(f);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            Face sub = f & ~face_bit(idx[i]);
            if (index.count(d - 1) && index[d - 1].count(sub))
                out.emplace_back(sub, i % 2 == 0 ? 1 : -1);
        }
        return out;
    };

    for (auto& [d, fs] : cc.basis) {
        std::size_t nrows = index.count(d - 1) ? index[d - 1].size() : 0;
        auto& m = cc.boundary[d];
        if (nrows == 0) continue;
        m.assign(nrows, std::vector<mpz_class>(fs.size(), 0));
        for (std::size_t j = 0; j < fs.size(); ++j) {
            for (auto& [sub, sign] : face_boundary(fs[j], d)) m[index[d - 1][sub]][j] = sign;
            // ∂∘∂ = 0, checked per generator
            std::map<Face, int> sq;
            for (auto& [sub, sign] : face_boundary(fs[j], d))
                for (auto& [sub2, sign2] : face_boundary(sub, d - 1)) sq[sub2] += sign * sign2;
            for (auto& [g, c] : sq)
                if (c != 0) throw std::logic_error("boundary squared nonzero");
        }
    }
    return cc;
}

BettiTable relative_betti(const Complex& a, const Complex& b) {
    RelativeChainComplex cc = relative_chain_complex(a, b);

    std::map<int, long long> rank_of_boundary;
    std::map<int, std::vector<mpz_class>> factors;
    for (auto& [d, fs] : cc.basis) {
        auto it = cc.boundary.find(d);
        auto diag = it == cc.boundary.end() ? std::vector<mpz_class>{}
                                            : smith_normal_form(it->second);
        rank_of_boundary[d] = static_cast<long long>(diag.size());
        factors[d] = std::move(diag);
    }

    BettiTable out;
    for (auto& [d, fs] : cc.basis) {
        long long rd = rank_of_boundary.count(d) ? rank_of_boundary[d] : 0;
        long long rd1 = rank_of_boundary.count(d + 1) ? rank_of_boundary[d + 1] : 0;
        long long beta = static_cast<long long>(fs.size()) - rd - rd1;
        assert(beta >= 0);
        if (beta != 0) out.betti[d] = beta;
        if (auto it = factors.find(d + 1); it != factors.end()) {
            std::vector<mpz_class> tor;
            for (const mpz_class& v : it->second)
                if (v > 1) tor.push_back(v);
            if (!tor.empty()) out.torsion[d] = std::move(tor);
        }
    }
    return out;
}

BivariatePolynomial poincare_from_homology(const MonotoneMap& f) {
    if (!f.codomain.is_naturals())
        throw std::domain_error("Poincaré polynomial needs a map into the naturals");
    BivariatePolynomial p;
    for (long long j : attained_values(f)) {
        auto [le, lt] = sublevel_pair(f, j);
        BettiTable bt = relative_betti(le, lt);
        if (!bt.torsion_free())
            throw std::domain_error("torsion in a sublevel pair; no Poincaré polynomial");
        for (auto& [d, beta] : bt.betti)
            p.add_term(d + 1, static_cast<int>(j), beta);
    }
    return p;
}

}  // namespace evasive
