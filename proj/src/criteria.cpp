#include <acmlines/criteria.hpp>

#include <functional>

namespace acmlines {

MultiplicityTensor::MultiplicityTensor(const VarietyOfLines& x) : d_(x.d()) {
    mu_.assign(static_cast<std::size_t>(d_[0]) * d_[1] * d_[2], 0);
    m3_.assign(static_cast<std::size_t>(d_[0]) * d_[1], 0);
    m2_.assign(static_cast<std::size_t>(d_[0]) * d_[2], 0);
    m1_.assign(static_cast<std::size_t>(d_[1]) * d_[2], 0);
    for (const Cell& c : x.u3()) m3_[(c.row - 1) * d_[1] + (c.col - 1)] = 1;
    for (const Cell& c : x.u2()) m2_[(c.row - 1) * d_[2] + (c.col - 1)] = 1;
    for (const Cell& c : x.u1()) m1_[(c.row - 1) * d_[2] + (c.col - 1)] = 1;
    for (int i = 1; i <= d_[0]; ++i)
        for (int j = 1; j <= d_[1]; ++j)
            for (int k = 1; k <= d_[2]; ++k) mu_[offset(i, j, k)] = m3(i, j) + m2(i, k) + m1(j, k);
}

int MultiplicityTensor::slice(Direction h, int row, int col) const {
    switch (h) {
        case Direction::Three: return m3(row, col);
        case Direction::Two: return m2(row, col);
        case Direction::One: return m1(row, col);
    }
    return 0;
}

std::vector<std::vector<int>> MultiplicityTensor::slice_matrix(Direction h) const {
    auto fams = direction_families(h);
    int rows = d_[family_index(fams[0])];
    int cols = d_[family_index(fams[1])];
    std::vector<std::vector<int>> out(rows, std::vector<int>(cols, 0));
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) out[r - 1][c - 1] = slice(h, r, c);
    return out;
}

std::string HypWitness::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ", ";
        s += tuple[i].name();
    }
    return s + ")";
}

std::string NumericWitness::to_string() const {
    std::string s = "Hyp" + std::to_string(n);
    if (slice) {
        s += " slice M^(" + std::to_string(direction_index(*slice)) + ")";
    } else if (condition > 0) {
        s += " condition " + std::to_string(condition);
    }
    auto put = [&](const char* name, int v) {
        if (v) s += std::string(" ") + name + "=" + std::to_string(v);
    };
    put("a1", a1), put("a2", a2), put("b1", b1), put("b2", b2), put("c1", c1), put("c2", c2);
    return s;
}

// ---------------------------------------------------------------------------
// Hyp_n enumeration

HypResult enumerate_hyp_star(const VarietyOfLines& x, int n) {
    if (n < 4) throw Error(ErrorCode::BadN, "Hyp_n needs n >= 4, got " + std::to_string(n));
    auto hs = x.hyperplanes();
    int total = static_cast<int>(hs.size());
    if (total < n) return {};

    std::vector<int> tuple;
    std::vector<bool> used(total, false);
    std::optional<HypWitness> witness;

    // Position p may only hold hyperplanes compatible with all earlier
    // positions: adjacent pairs must not span a line of X, the others must.
    auto compatible = [&](int cand, std::size_t p) {
        for (std::size_t q = 0; q < p; ++q) {
            bool adjacent = (q + 1 == p) || (q == 0 && p + 1 == static_cast<std::size_t>(n));
            if (x.has_line(hs[tuple[q]], hs[cand]) == adjacent) return false;
        }
        return true;
    };

    std::function<bool()> search = [&]() -> bool {
        std::size_t p = tuple.size();
        if (p == static_cast<std::size_t>(n)) {
            // Canonical up to reflection.
            if (tuple[1] > tuple.back()) return false;
            HypWitness w;
            for (int v : tuple) w.tuple.push_back(hs[v]);
            witness = std::move(w);
            return true;
        }
        for (int cand = tuple.front() + 1; cand < total; ++cand) {
            if (used[cand] || !compatible(cand, p)) continue;
            used[cand] = true;
            tuple.push_back(cand);
            bool done = search();
            tuple.pop_back();
            used[cand] = false;
            if (done) return true;
        }
        return false;
    };

    for (int first = 0; first < total && !witness; ++first) {
        tuple.assign(1, first);
        used.assign(total, false);
        used[first] = true;
        search();
    }
    if (witness) return {false, std::move(witness)};
    return {};
}

HypResult has_hyp_star(const VarietyOfLines& x, int n) {
    if (n < 4 || n > 6) {
        throw Error(ErrorCode::BadN, "n must be 4, 5 or 6, got " + std::to_string(n));
    }
    return enumerate_hyp_star(x, n);
}

// ---------------------------------------------------------------------------
// Numeric criteria. Index pairs are ordered and distinct.

NumericResult criterion_hyp6_numeric(const MultiplicityTensor& m) {
    const auto& d = m.d();
    for (int a1 = 1; a1 <= d[0]; ++a1)
        for (int a2 = 1; a2 <= d[0]; ++a2) {
            if (a1 == a2) continue;
            for (int b1 = 1; b1 <= d[1]; ++b1)
                for (int b2 = 1; b2 <= d[1]; ++b2) {
                    if (b1 == b2) continue;
                    for (int c1 = 1; c1 <= d[2]; ++c1) {
                        bool lower = m.mu(a1, b1, c1) == 3 && m.mu(a1, b2, c1) == 2 &&
                                     m.mu(a2, b1, c1) == 2 && m.mu(a2, b2, c1) == 2;
                        if (!lower) continue;
                        for (int c2 = 1; c2 <= d[2]; ++c2) {
                            if (c1 == c2) continue;
                            bool upper = m.mu(a1, b1, c2) == 2 && m.mu(a1, b2, c2) == 2 &&
                                         m.mu(a2, b1, c2) == 2 && m.mu(a2, b2, c2) == 3;
                            if (upper) {
                                NumericWitness w{6, 0, std::nullopt, a1, a2, b1, b2, c1, c2};
                                return {false, w};
                            }
                        }
                    }
                }
        }
    return {};
}

namespace {

// Pattern [[2,1],[2,2]] on mu together with [[1,1],[0,1]] on the slice.
bool hyp5_block(int m11, int m12, int m21, int m22, int s11, int s12, int s21, int s22) {
    return m11 == 2 && m12 == 1 && m21 == 2 && m22 == 2 && s11 == 1 && s12 == 1 && s21 == 0 &&
           s22 == 1;
}

}  // namespace

NumericResult criterion_hyp5_numeric(const MultiplicityTensor& m) {
    const auto& d = m.d();
    // 1) two A, two B, one C.
    for (int a1 = 1; a1 <= d[0]; ++a1)
        for (int a2 = 1; a2 <= d[0]; ++a2)
            for (int b1 = 1; b1 <= d[1]; ++b1)
                for (int b2 = 1; b2 <= d[1]; ++b2) {
                    if (a1 == a2 || b1 == b2) continue;
                    for (int c1 = 1; c1 <= d[2]; ++c1) {
                        if (hyp5_block(m.mu(a1, b1, c1), m.mu(a1, b2, c1), m.mu(a2, b1, c1),
                                       m.mu(a2, b2, c1), m.m3(a1, b1), m.m3(a1, b2), m.m3(a2, b1),
                                       m.m3(a2, b2))) {
                            return {false, NumericWitness{5, 1, std::nullopt, a1, a2, b1, b2, c1, 0}};
                        }
                    }
                }
    // 2) two A, two C, one B.
    for (int a1 = 1; a1 <= d[0]; ++a1)
        for (int a2 = 1; a2 <= d[0]; ++a2)
            for (int c1 = 1; c1 <= d[2]; ++c1)
                for (int c2 = 1; c2 <= d[2]; ++c2) {
                    if (a1 == a2 || c1 == c2) continue;
                    for (int b1 = 1; b1 <= d[1]; ++b1) {
                        if (hyp5_block(m.mu(a1, b1, c1), m.mu(a1, b1, c2), m.mu(a2, b1, c1),
                                       m.mu(a2, b1, c2), m.m2(a1, c1), m.m2(a1, c2), m.m2(a2, c1),
                                       m.m2(a2, c2))) {
                            return {false, NumericWitness{5, 2, std::nullopt, a1, a2, b1, 0, c1, c2}};
                        }
                    }
                }
    // 3) two B, two C, one A.
    for (int b1 = 1; b1 <= d[1]; ++b1)
        for (int b2 = 1; b2 <= d[1]; ++b2)
            for (int c1 = 1; c1 <= d[2]; ++c1)
                for (int c2 = 1; c2 <= d[2]; ++c2) {
                    if (b1 == b2 || c1 == c2) continue;
                    for (int a1 = 1; a1 <= d[0]; ++a1) {
                        if (hyp5_block(m.mu(a1, b1, c1), m.mu(a1, b1, c2), m.mu(a1, b2, c1),
                                       m.mu(a1, b2, c2), m.m1(b1, c1), m.m1(b1, c2), m.m1(b2, c1),
                                       m.m1(b2, c2))) {
                            return {false, NumericWitness{5, 3, std::nullopt, a1, 0, b1, b2, c1, c2}};
                        }
                    }
                }
    return {};
}

NumericResult criterion_hyp4_numeric(const MultiplicityTensor& m) {
    const auto& d = m.d();
    // 1) two A, one B, one C.
    for (int a1 = 1; a1 <= d[0]; ++a1)
        for (int a2 = 1; a2 <= d[0]; ++a2) {
            if (a1 == a2) continue;
            for (int b1 = 1; b1 <= d[1]; ++b1)
                for (int c1 = 1; c1 <= d[2]; ++c1) {
                    if (m.mu(a1, b1, c1) == 1 && m.mu(a2, b1, c1) == 1 && m.m3(a1, b1) == 1 &&
                        m.m3(a2, b1) == 0) {
                        return {false, NumericWitness{4, 1, std::nullopt, a1, a2, b1, 0, c1, 0}};
                    }
                }
        }
    // 2) two C, one A, one B.
    for (int c1 = 1; c1 <= d[2]; ++c1)
        for (int c2 = 1; c2 <= d[2]; ++c2) {
            if (c1 == c2) continue;
            for (int a1 = 1; a1 <= d[0]; ++a1)
                for (int b1 = 1; b1 <= d[1]; ++b1) {
                    if (m.mu(a1, b1, c1) == 1 && m.mu(a1, b1, c2) == 1 && m.m2(a1, c1) == 1 &&
                        m.m2(a1, c2) == 0) {
                        return {false, NumericWitness{4, 2, std::nullopt, a1, 0, b1, 0, c1, c2}};
                    }
                }
        }
    // 3) two B, one A, one C.
    for (int b1 = 1; b1 <= d[1]; ++b1)
        for (int b2 = 1; b2 <= d[1]; ++b2) {
            if (b1 == b2) continue;
            for (int a1 = 1; a1 <= d[0]; ++a1)
                for (int c1 = 1; c1 <= d[2]; ++c1) {
                    if (m.mu(a1, b1, c1) == 1 && m.mu(a1, b2, c1) == 1 && m.m1(b1, c1) == 1 &&
                        m.m1(b2, c1) == 0) {
                        return {false, NumericWitness{4, 3, std::nullopt, a1, 0, b1, b2, c1, 0}};
                    }
                }
        }
    // Two hyperplanes from each of two families: rows r1, r2 and columns
    // s1, s2 of M^(h) holding a 2x2 permutation pattern.
    for (Direction h : {Direction::Three, Direction::Two, Direction::One}) {
        auto fams = direction_families(h);
        int rows = d[family_index(fams[0])];
        int cols = d[family_index(fams[1])];
        for (int r1 = 1; r1 <= rows; ++r1)
            for (int r2 = r1 + 1; r2 <= rows; ++r2)
                for (int s1 = 1; s1 <= cols; ++s1)
                    for (int s2 = 1; s2 <= cols; ++s2) {
                        if (s1 == s2) continue;
                        if (m.slice(h, r1, s1) == 1 && m.slice(h, r2, s2) == 1 &&
                            m.slice(h, r1, s2) == 0 && m.slice(h, r2, s1) == 0) {
                            NumericWitness w{4, 0, h};
                            int* idx[3][2] = {{&w.a1, &w.a2}, {&w.b1, &w.b2}, {&w.c1, &w.c2}};
                            *idx[family_index(fams[0])][0] = r1;
                            *idx[family_index(fams[0])][1] = r2;
                            *idx[family_index(fams[1])][0] = s1;
                            *idx[family_index(fams[1])][1] = s2;
                            return {false, w};
                        }
                    }
    }
    return {};
}

// ---------------------------------------------------------------------------

bool RouteVerdicts::unanimous() const {
    if (hyp != numeric) return false;
    return chordal == hyp_all() && chordal == numeric_all();
}

namespace {

std::string describe(const AcmVerdict& v) {
    const auto& r = v.routes;
    auto b = [](bool x) { return x ? "pass" : "fail"; };
    std::string s = std::string("chordal=") + b(r.chordal);
    for (int n = 4; n <= 6; ++n) {
        s += " hyp" + std::to_string(n) + "=" + b(r.hyp[n - 4]);
        s += " numeric" + std::to_string(n) + "=" + b(r.numeric[n - 4]);
    }
    return s;
}

}  // namespace

CriteriaDisagreement::CriteriaDisagreement(AcmVerdict verdict)
    : Error(ErrorCode::CriteriaDisagreement, "ACM routes disagree: " + describe(verdict)),
      verdict_(std::move(verdict)) {}

AcmVerdict evaluate_routes(const VarietyOfLines& x) {
    AcmVerdict v;

    ChordalityResult ch = is_chordal(complement(build_graph(x)));
    std::array<HypResult, 3> hyp;
    for (int n = 4; n <= 6; ++n) hyp[n - 4] = has_hyp_star(x, n);
    MultiplicityTensor m(x);
    std::array<NumericResult, 3> num{criterion_hyp4_numeric(m), criterion_hyp5_numeric(m),
                                     criterion_hyp6_numeric(m)};

    v.routes.chordal = ch.chordal;
    v.cycle = ch.witness;
    for (int i = 0; i < 3; ++i) {
        v.routes.hyp[i] = hyp[i].holds;
        v.routes.numeric[i] = num[i].holds;
        if (!hyp[i].holds && !v.failing_n) {
            v.failing_n = i + 4;
            v.hyp_witness = hyp[i].witness;
        }
        if (!num[i].holds && !v.numeric_witness) v.numeric_witness = num[i].witness;
    }
    v.is_acm = v.routes.chordal && v.routes.hyp_all() && v.routes.numeric_all();
    return v;
}

AcmVerdict is_acm(const VarietyOfLines& x) {
    AcmVerdict v = evaluate_routes(x);
    if (!v.routes.unanimous()) throw CriteriaDisagreement(v);
    return v;
}

}  // namespace acmlines
