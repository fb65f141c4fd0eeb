#include <acmlines/report.hpp>

#include <sstream>

namespace acmlines::io {

namespace {

json names(const std::vector<HyperplaneId>& hs) {
    json arr = json::array();
    for (const auto& h : hs) arr.push_back(h.name());
    return arr;
}

json grid_json(const Grid3& g) {
    const auto& b = g.box();
    json out = json::array();
    for (int i = 0; i <= b.a; ++i) {
        json plane = json::array();
        for (int j = 0; j <= b.b; ++j) {
            json row = json::array();
            for (int k = 0; k <= b.c; ++k) row.push_back(g.at(i, j, k));
            plane.push_back(row);
        }
        out.push_back(plane);
    }
    return out;
}

}  // namespace

json verdict_to_json(const AcmVerdict& v) {
    const auto& r = v.routes;
    json routes{{"chordal", r.chordal},
                {"hyp", {{"4", r.hyp[0]}, {"5", r.hyp[1]}, {"6", r.hyp[2]}}},
                {"numeric", {{"4", r.numeric[0]}, {"5", r.numeric[1]}, {"6", r.numeric[2]}}}};
    json out{{"acm", v.is_acm}, {"unanimous", r.unanimous()}, {"routes", routes}};
    out["failing_n"] = v.failing_n ? json(*v.failing_n) : json(nullptr);

    if (v.is_acm) {
        out["witness"] = nullptr;
        return out;
    }
    json w = json::object();
    if (v.cycle) w["cycle"] = names(v.cycle->cycle);
    if (v.hyp_witness) w["hyp_tuple"] = names(v.hyp_witness->tuple);
    if (v.numeric_witness) {
        const auto& n = *v.numeric_witness;
        json nw{{"n", n.n}, {"condition", n.condition}};
        nw["slice"] = n.slice ? json(direction_index(*n.slice)) : json(nullptr);
        nw["a"] = {n.a1, n.a2};
        nw["b"] = {n.b1, n.b2};
        nw["c"] = {n.c1, n.c2};
        w["numeric"] = nw;
    }
    out["witness"] = w;
    return out;
}

json degrees_to_json(const DegreeSet& s) {
    json arr = json::array();
    for (const auto& t : s) arr.push_back({t.a, t.b, t.c});
    return arr;
}

std::string hilbert_csv(const Grid3& delta, const Grid3& h) {
    std::ostringstream os;
    os << "i,j,k,deltaH,H\n";
    const auto& b = h.box();
    for (int i = 0; i <= b.a; ++i)
        for (int j = 0; j <= b.b; ++j)
            for (int k = 0; k <= b.c; ++k)
                os << i << ',' << j << ',' << k << ',' << delta.at(i, j, k) << ',' << h.at(i, j, k) << '\n';
    return os.str();
}

json hilbert_json(const Grid3& delta, const Grid3& h) {
    const auto& b = h.box();
    return json{{"box", {b.a, b.b, b.c}}, {"H", grid_json(h)}, {"deltaH", grid_json(delta)}};
}

}  // namespace acmlines::io
