#include <acmlines/exact.hpp>

#include <algorithm>
#include <cassert>

namespace acmlines::exact {

std::size_t RationalMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    std::vector<Integer> m(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer den = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), at(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& q = at(r, c);
            m[r * cols_ + c] = q.get_num() * (den / q.get_den());
        }
    }
    auto e = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * cols_ + c]; };

    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && e(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != rank) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(e(piv, c), e(rank, c));
        }
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            for (std::size_t c = col + 1; c < cols_; ++c) {
                e(r, c) = (e(rank, col) * e(r, c) - e(r, col) * e(rank, c)) / prev;
            }
            e(r, col) = 0;
        }
        prev = e(rank, col);
        ++rank;
    }
    return rank;
}

Integer SparseVector::at(int index) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != entries.end() && it->first == index) return it->second;
    return 0;
}

void SparseVector::push(int index, Integer value) {
    assert(entries.empty() || entries.back().first < index);
    if (value != 0) entries.emplace_back(index, std::move(value));
}

void SparseVector::make_primitive() {
    if (entries.empty()) return;
    Integer g = 0;
    for (const auto& [i, v] : entries) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (entries.front().second < 0) g = -g;
    if (g != 1) {
        for (auto& [i, v] : entries) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

SparseVector SparseVector::from_map(const std::map<int, Integer>& m) {
    SparseVector v;
    for (const auto& [i, x] : m) v.push(i, x);
    return v;
}

namespace {

// alpha * v - beta * w, merged by index.
SparseVector combine(const Integer& alpha, const SparseVector& v, const Integer& beta,
                     const SparseVector& w) {
    SparseVector out;
    out.entries.reserve(v.entries.size() + w.entries.size());
    auto a = v.entries.begin();
    auto b = w.entries.begin();
    while (a != v.entries.end() || b != w.entries.end()) {
        if (b == w.entries.end() || (a != v.entries.end() && a->first < b->first)) {
            out.push(a->first, alpha * a->second);
            ++a;
        } else if (a == v.entries.end() || b->first < a->first) {
            out.push(b->first, -beta * b->second);
            ++b;
        } else {
            out.push(a->first, alpha * a->second - beta * b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

}  // namespace

SparseVector EchelonBasis::reduce(SparseVector v) const {
    v.make_primitive();
    // Pivots are processed in increasing column order; subtracting the
    // pivot row for column p only touches columns >= p.
    std::size_t pos = 0;
    while (pos < v.entries.size()) {
        int col = v.entries[pos].first;
        auto it = rows_.find(col);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        const SparseVector& row = it->second;
        Integer alpha = row.lead_value();
        Integer beta = v.entries[pos].second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
        alpha /= g;
        beta /= g;
        v = combine(alpha, v, beta, row);
        v.make_primitive();
        pos = 0;
        while (pos < v.entries.size() && v.entries[pos].first < col) ++pos;
    }
    return v;
}

bool EchelonBasis::insert(SparseVector v) {
    SparseVector r = reduce(std::move(v));
    if (r.empty()) return false;
    // Keep the row's lead in front: pivot = first column not already a pivot.
    // After reduce() every pivot column is cleared, so the lead is free.
    int lead = r.lead();
    assert(!rows_.contains(lead));
    rows_.emplace(lead, std::move(r));
    return true;
}

std::vector<SparseVector> EchelonBasis::orthogonal_complement() const {
    // Bring the rows to reduced echelon form (pivot columns cleared
    // everywhere except in their own row), then read off one nullspace
    // vector per free column.
    std::map<int, SparseVector> rref = rows_;
    for (auto it = rref.rbegin(); it != rref.rend(); ++it) {
        const int pcol = it->first;
        const SparseVector& prow = it->second;
        for (auto& [col, row] : rref) {
            if (col >= pcol) break;
            Integer beta = row.at(pcol);
            if (beta == 0) continue;
            Integer alpha = prow.lead_value();
            Integer g;
            mpz_gcd(g.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
            alpha /= g;
            beta /= g;
            row = combine(alpha, row, beta, prow);
            row.make_primitive();
        }
    }

    std::vector<SparseVector> basis;
    for (int f = 0; f < dimension_; ++f) {
        if (rref.contains(f)) continue;
        // x_f = L, x_p = -L * R[p][f] / R[p][p] with L the lcm of the leads.
        Integer l = 1;
        for (const auto& [p, row] : rref) {
            if (row.at(f) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row.lead_value().get_mpz_t());
        }
        std::map<int, Integer> x;
        x[f] = l;
        for (const auto& [p, row] : rref) {
            Integer rf = row.at(f);
            if (rf == 0) continue;
            x[p] = -(l / row.lead_value()) * rf;
        }
        SparseVector v = SparseVector::from_map(x);
        v.make_primitive();
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank_of(const std::vector<SparseVector>& vectors, int dimension) {
    EchelonBasis b(dimension);
    for (const auto& v : vectors) b.insert(v);
    return b.rank();
}

}  // namespace acmlines::exact
