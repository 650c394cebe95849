#include "tumap/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <functional>
#include <cctype>

#include <json.hpp>

#include "tiling_build.hpp"

namespace tumap::tilings {

using nlohmann::json;

namespace {

// cos/sin of 30*k degrees as exact quads
Quad cos30(int k) {
    k = ((k % 12) + 12) % 12;
    static const int num[12] = {2, 0, 1, 0, -1, 0, -2, 0, -1, 0, 1, 0};   // rational part *2
    static const int rnum[12] = {0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1};  // sqrt3 part *2
    return Quad(Rational(num[k], 2), Rational(rnum[k], 2));
}
Quad sin30(int k) { return cos30(k - 3); }

QuadPoint reduce_mod_unit(const QuadPoint& p, std::array<int64_t, 2>* shift = nullptr) {
    int64_t fx = p.x.floor(), fy = p.y.floor();
    if (shift) *shift = {fx, fy};
    return {p.x - Quad(fx), p.y - Quad(fy)};
}

}  // namespace

QuadMat rot30(int k) {
    Quad c = cos30(k), s = sin30(k);
    return {c, -s, s, c};
}

QuadMat refl15(int j) {
    Quad c = cos30(j), s = sin30(j);  // cos/sin of 2*theta
    return {c, s, s, -c};
}

int TilingSpec::point_group_order() const {
    int n = 0;
    for (const auto& s : symmetries)
        if (s.integral_translation()) ++n;
    return n;
}

void TilingSpec::finalize() {
    if ((int)vertices.size() != v0)
        throw tiling_error("tiling " + std::to_string(id) + ": vertex count " +
                           std::to_string(vertices.size()) + " != v0 " + std::to_string(v0));
    for (auto& s : symmetries) {
        int64_t det = s.linear.det();
        if (det != 1 && det != -1)
            throw tiling_error("tiling " + std::to_string(id) + ": symmetry " + s.label +
                               " is not unimodular");
        for (const Rational* t : {&s.t1, &s.t2})
            if (t->den != 1 && t->den != 2)
                throw tiling_error("tiling " + std::to_string(id) + ": symmetry " + s.label +
                                   " translation denominator " + std::to_string(t->den) +
                                   " (must be 1 or 2)");
    }
    for (auto& v : vertices) {
        if (v.pos.x.sign() < 0 || v.pos.y.sign() < 0 || (v.pos.x - Quad(1)).sign() >= 0 ||
            (v.pos.y - Quad(1)).sign() >= 0)
            throw tiling_error("tiling " + std::to_string(id) + ": vertex outside [0,1)^2");
    }
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i].pos == vertices[j].pos)
                throw tiling_error("tiling " + std::to_string(id) + ": duplicate vertex");

    // exact action of each symmetry on the vertex list; -1 marks a miss,
    // reported later by validate()
    sym_image.assign(symmetries.size(), std::vector<int>(vertices.size(), -1));
    sym_offset.assign(symmetries.size(),
                      std::vector<std::array<int64_t, 2>>(vertices.size(), {0, 0}));
    for (size_t s = 0; s < symmetries.size(); ++s) {
        const auto& sym = symmetries[s];
        for (size_t i = 0; i < vertices.size(); ++i) {
            const auto& p = vertices[i].pos;
            QuadPoint q{Quad(sym.linear.m11) * p.x + Quad(sym.linear.m12) * p.y + Quad(sym.t1),
                        Quad(sym.linear.m21) * p.x + Quad(sym.linear.m22) * p.y + Quad(sym.t2)};
            std::array<int64_t, 2> off{};
            QuadPoint r = reduce_mod_unit(q, &off);
            for (size_t j = 0; j < vertices.size(); ++j) {
                if (vertices[j].pos == r) {
                    sym_image[s][i] = (int)j;
                    sym_offset[s][i] = off;
                    break;
                }
            }
        }
    }
}

TilingSpec build_tiling(const RawTiling& raw) {
    TilingSpec spec;
    spec.id = raw.id;
    spec.type_string = raw.type_string;
    spec.basisA = raw.A;
    spec.basisB = raw.B;
    spec.declared_orbit_count = raw.declared_orbit_count;
    spec.v0 = raw.v0;

    QuadMat basis{raw.A.x, raw.B.x, raw.A.y, raw.B.y};
    QuadMat inv = basis.inverse();

    // vertices: to lattice coordinates, reduce, dedupe
    for (const auto& [pos, vtype] : raw.verts) {
        QuadPoint shifted{pos.x - raw.origin.x, pos.y - raw.origin.y};
        QuadPoint lat = inv.apply(shifted);
        QuadPoint r = reduce_mod_unit(lat);
        bool dup = false;
        for (const auto& v : spec.vertices)
            if (v.pos == r) {
                dup = true;
                if (v.vtype != vtype)
                    throw tiling_error("tiling " + std::to_string(raw.id) +
                                       ": vertex duplicated with conflicting types");
                break;
            }
        if (!dup) spec.vertices.push_back({r, vtype});
    }

    // edges: unit (or listed) squared distances between cell representatives
    std::vector<Quad> dists = raw.allowed_dist2;
    if (dists.empty()) dists.push_back(Quad(1));
    const int W = 2;
    for (size_t i = 0; i < spec.vertices.size(); ++i) {
        QuadPoint pi = spec.euclid(spec.vertices[i].pos);
        for (size_t j = 0; j < spec.vertices.size(); ++j) {
            for (int64_t m1 = -W; m1 <= W; ++m1)
                for (int64_t m2 = -W; m2 <= W; ++m2) {
                    if (j < i) continue;
                    if (j == i && (m1 < 0 || (m1 == 0 && m2 <= 0))) continue;  // one per pair
                    QuadPoint pj = spec.euclid(spec.vertices[j].pos);
                    pj.x = pj.x + Quad(m1) * spec.basisA.x + Quad(m2) * spec.basisB.x;
                    pj.y = pj.y + Quad(m1) * spec.basisA.y + Quad(m2) * spec.basisB.y;
                    Quad d2 = dist2(pi, pj);
                    for (const auto& ok : dists)
                        if (d2 == ok) {
                            spec.edges.push_back({(int)i, (int)j, {m1, m2}});
                            break;
                        }
                }
        }
    }

    // symmetries: conjugate into lattice coordinates
    for (const auto& rs : raw.syms) {
        QuadMat lat = inv * rs.linear * basis;
        auto as_int = [&](const Quad& q) -> int64_t {
            if (!q.is_integer())
                throw tiling_error("tiling " + std::to_string(raw.id) + ": symmetry " + rs.label +
                                   " has non-integral lattice matrix entry " + q.str());
            return q.a.num;
        };
        AffineSymmetry sym;
        sym.label = rs.label;
        sym.linear = {as_int(lat.m11), as_int(lat.m12), as_int(lat.m21), as_int(lat.m22)};

        auto set_translation = [&](const QuadPoint& te) {
            QuadPoint tl = inv.apply(te);
            if (!tl.x.is_rational() || !tl.y.is_rational())
                throw tiling_error("tiling " + std::to_string(raw.id) + ": symmetry " + rs.label +
                                   " has irrational lattice translation");
            sym.t1 = tl.x.a;
            sym.t2 = tl.y.a;
        };

        if (!rs.solve_translation) {
            set_translation(rs.translation);
        } else {
            // find the translation that maps vertex 0 onto some vertex, such
            // that every vertex then maps onto a vertex
            bool solved = false;
            QuadPoint img0 = rs.linear.apply(spec.euclid(spec.vertices[0].pos));
            for (size_t j = 0; j < spec.vertices.size() && !solved; ++j) {
                for (int64_t c1 = -1; c1 <= 1 && !solved; ++c1)
                    for (int64_t c2 = -1; c2 <= 1 && !solved; ++c2) {
                        QuadPoint tgt = spec.euclid(
                            {spec.vertices[j].pos.x + Quad(c1), spec.vertices[j].pos.y + Quad(c2)});
                        QuadPoint te{tgt.x - img0.x, tgt.y - img0.y};
                        // verify on all vertices
                        bool all = true;
                        for (const auto& v : spec.vertices) {
                            QuadPoint q = rs.linear.apply(spec.euclid(v.pos));
                            q.x = q.x + te.x;
                            q.y = q.y + te.y;
                            QuadPoint latq = reduce_mod_unit(inv.apply(q));
                            bool hit = false;
                            for (const auto& w : spec.vertices)
                                if (w.pos == latq) {
                                    hit = true;
                                    break;
                                }
                            if (!hit) {
                                all = false;
                                break;
                            }
                        }
                        if (all) {
                            set_translation(te);
                            solved = true;
                        }
                    }
            }
            if (!solved)
                throw tiling_error("tiling " + std::to_string(raw.id) + ": symmetry " + rs.label +
                                   ": no translation makes it act on the vertex set");
        }
        // normalize translation into [0,1)
        auto frac = [](Rational r) {
            int64_t f = (r.num >= 0) ? r.num / r.den : -((-r.num + r.den - 1) / r.den);
            return r - Rational(f);
        };
        sym.t1 = frac(sym.t1);
        sym.t2 = frac(sym.t2);
        spec.symmetries.push_back(sym);
    }

    spec.finalize();
    return spec;
}

std::vector<int> parse_vertex_type(const std::string& s) {
    // "[3^2,4^1,3^1,4^1]" -> {3,3,4,3,4}
    std::vector<int> out;
    size_t i = 0;
    auto fail = [&]() { throw tiling_error("bad vertex type string: " + s); };
    if (i >= s.size() || s[i] != '[') fail();
    ++i;
    while (i < s.size() && s[i] != ']') {
        int gon = 0;
        while (i < s.size() && isdigit((unsigned char)s[i])) gon = gon * 10 + (s[i++] - '0');
        if (gon < 3) fail();
        int rep = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            rep = 0;
            while (i < s.size() && isdigit((unsigned char)s[i])) rep = rep * 10 + (s[i++] - '0');
            if (rep < 1) fail();
        }
        for (int k = 0; k < rep; ++k) out.push_back(gon);
        if (i < s.size() && s[i] == ',') ++i;
    }
    if (i >= s.size() || s[i] != ']') fail();
    if (out.empty()) fail();
    return out;
}

bool same_cycle_up_to_rotation_reversal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    size_t n = a.size();
    for (int rev = 0; rev < 2; ++rev) {
        std::vector<int> c = b;
        if (rev) std::reverse(c.begin(), c.end());
        for (size_t r = 0; r < n; ++r) {
            bool ok = true;
            for (size_t k = 0; k < n && ok; ++k) ok = (a[k] == c[(k + r) % n]);
            if (ok) return true;
        }
    }
    return false;
}

namespace {

// directed edge (dart) incidence for face walking
struct Dart {
    int to;
    std::array<int64_t, 2> off;
    double angle;
};

std::vector<std::vector<Dart>> build_darts(const TilingSpec& spec, std::vector<ValidationIssue>* issues) {
    std::vector<std::vector<Dart>> darts(spec.vertices.size());
    for (const auto& e : spec.edges) {
        QuadPoint pi = spec.euclid(spec.vertices[e.i].pos);
        QuadPoint pj = spec.euclid({spec.vertices[e.j].pos.x + Quad(e.off[0]),
                                    spec.vertices[e.j].pos.y + Quad(e.off[1])});
        double dx = pj.x.to_double() - pi.x.to_double();
        double dy = pj.y.to_double() - pi.y.to_double();
        darts[e.i].push_back({e.j, e.off, std::atan2(dy, dx)});
        darts[e.j].push_back({e.i, {-e.off[0], -e.off[1]}, std::atan2(-dy, -dx)});
    }
    for (size_t v = 0; v < darts.size(); ++v) {
        auto& dv = darts[v];
        std::sort(dv.begin(), dv.end(), [](const Dart& a, const Dart& b) { return a.angle < b.angle; });
        for (size_t k = 0; k + 1 < dv.size(); ++k)
            if (issues && dv[k + 1].angle - dv[k].angle < 1e-9)
                issues->push_back({"face_cycle", "vertex " + std::to_string(v) +
                                                     ": coincident edge directions"});
    }
    return darts;
}

int find_reverse_slot(const std::vector<std::vector<Dart>>& darts, int u, int slot) {
    // (to, off) determines the reverse dart uniquely: two distinct unit
    // segments cannot join the same vertex pair at the same offset
    const Dart& d = darts[u][slot];
    const auto& dv = darts[d.to];
    for (size_t r = 0; r < dv.size(); ++r)
        if (dv[r].to == u && dv[r].off[0] == -d.off[0] && dv[r].off[1] == -d.off[1]) return (int)r;
    return -1;
}

}  // namespace

std::vector<std::vector<int>> face_cycles(const TilingSpec& spec) {
    std::vector<ValidationIssue> sink;
    auto darts = build_darts(spec, &sink);
    size_t nv = spec.vertices.size();
    // face size for the face on the left of each dart
    std::vector<std::vector<int>> fsize(nv);
    for (size_t v = 0; v < nv; ++v) fsize[v].assign(darts[v].size(), -1);

    for (size_t v = 0; v < nv; ++v) {
        for (size_t k = 0; k < darts[v].size(); ++k) {
            if (fsize[v][k] >= 0) continue;
            // walk the face: next dart = clockwise-next after the reverse dart
            std::vector<std::pair<int, int>> walk;
            int cu = (int)v, ck = (int)k;
            std::array<int64_t, 2> cum{0, 0};
            bool ok = true;
            for (int step = 0; step < 64; ++step) {
                walk.push_back({cu, ck});
                const Dart& d = darts[cu][ck];
                cum[0] += d.off[0];
                cum[1] += d.off[1];
                int rs = find_reverse_slot(darts, cu, ck);
                if (rs < 0) {
                    ok = false;
                    break;
                }
                int deg = (int)darts[d.to].size();
                int nk = (rs - 1 + deg) % deg;
                cu = d.to;
                ck = nk;
                if (cu == (int)v && ck == (int)k && cum[0] == 0 && cum[1] == 0) break;
                if (step == 63) ok = false;
            }
            int size = ok ? (int)walk.size() : -2;
            for (auto [u, s] : walk)
                if (fsize[u][s] < 0) fsize[u][s] = size;
        }
    }
    return fsize;  // per vertex, per ccw slot: size of the face left of that dart
}

ValidationReport validate(const TilingSpec& spec) {
    ValidationReport rep;
    rep.tiling_id = spec.id;

    // (i) every symmetry maps the vertex set and edge set to itself
    for (size_t s = 0; s < spec.symmetries.size(); ++s) {
        for (size_t i = 0; i < spec.vertices.size(); ++i) {
            if (spec.sym_image[s][i] < 0) {
                rep.vertex_edge_closure_ok = false;
                rep.issues.push_back({"vertex_map", "symmetry " + spec.symmetries[s].label +
                                                        " does not map vertex " +
                                                        std::to_string(i) + " to a vertex"});
            }
        }
    }
    // edges: image of each edge must be an edge (as unordered dart pair)
    {
        std::set<std::tuple<int, int, int64_t, int64_t>> eset;
        for (const auto& e : spec.edges) {
            eset.insert({e.i, e.j, e.off[0], e.off[1]});
            eset.insert({e.j, e.i, -e.off[0], -e.off[1]});
        }
        for (size_t s = 0; s < spec.symmetries.size(); ++s) {
            const auto& L = spec.symmetries[s].linear;
            bool decided_bad = false;
            for (const auto& e : spec.edges) {
                int i2 = spec.sym_image[s][e.i], j2 = spec.sym_image[s][e.j];
                if (i2 < 0 || j2 < 0) continue;  // already reported
                // offset transforms: sigma(p_j + off) = p_{j2} + off_j + L*off
                int64_t lx = L.m11 * e.off[0] + L.m12 * e.off[1];
                int64_t ly = L.m21 * e.off[0] + L.m22 * e.off[1];
                int64_t ox = spec.sym_offset[s][e.j][0] + lx - spec.sym_offset[s][e.i][0];
                int64_t oy = spec.sym_offset[s][e.j][1] + ly - spec.sym_offset[s][e.i][1];
                if (!eset.count({i2, j2, ox, oy}) && !decided_bad) {
                    rep.vertex_edge_closure_ok = false;
                    decided_bad = true;
                    rep.issues.push_back({"edge_map", "symmetry " + spec.symmetries[s].label +
                                                          " breaks edge " + std::to_string(e.i) +
                                                          "-" + std::to_string(e.j)});
                }
            }
        }
    }

    // (ii) face cycles match declared vertex types
    auto fs = face_cycles(spec);
    for (size_t v = 0; v < spec.vertices.size(); ++v) {
        std::vector<int> cyc = fs[v];
        bool walk_ok = true;
        for (int x : cyc)
            if (x < 3) walk_ok = false;
        std::vector<int> want;
        try {
            want = parse_vertex_type(spec.vertices[v].vtype);
        } catch (const tiling_error&) {
            walk_ok = false;
        }
        if (!walk_ok || !same_cycle_up_to_rotation_reversal(cyc, want)) {
            rep.face_cycles_ok = false;
            std::string got = "{";
            for (size_t k = 0; k < cyc.size(); ++k)
                got += (k ? "," : "") + std::to_string(cyc[k]);
            got += "}";
            rep.issues.push_back({"face_cycle", "vertex " + std::to_string(v) + ": declared " +
                                                    spec.vertices[v].vtype + ", computed " + got});
        }
    }

    // (iii) symmetry closure under composition modulo lattice translations
    for (size_t s = 0; s < spec.symmetries.size(); ++s) {
        for (size_t t = 0; t < spec.symmetries.size(); ++t) {
            const auto& a = spec.symmetries[s];
            const auto& b = spec.symmetries[t];
            lattice::IntMatrix2 L = a.linear * b.linear;
            Rational u1 = Rational(a.linear.m11) * b.t1 + Rational(a.linear.m12) * b.t2 + a.t1;
            Rational u2 = Rational(a.linear.m21) * b.t1 + Rational(a.linear.m22) * b.t2 + a.t2;
            bool found = false;
            for (const auto& c : spec.symmetries) {
                if (!(c.linear == L)) continue;
                Rational d1 = u1 - c.t1, d2 = u2 - c.t2;
                if (d1.is_integer() && d2.is_integer()) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                rep.symmetry_closure_ok = false;
                rep.issues.push_back({"symmetry_closure",
                                      a.label + " * " + b.label + " is not in the list"});
            }
        }
    }

    // orbit count under the full list (translations already modded out)
    {
        std::vector<int> parent(spec.vertices.size());
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (size_t s = 0; s < spec.symmetries.size(); ++s)
            for (size_t i = 0; i < spec.vertices.size(); ++i)
                if (spec.sym_image[s][i] >= 0) {
                    int a = find((int)i), b = find(spec.sym_image[s][i]);
                    if (a != b) parent[a] = b;
                }
        std::set<int> roots;
        for (size_t i = 0; i < parent.size(); ++i) roots.insert(find((int)i));
        rep.computed_orbit_count = (int)roots.size();
        if (rep.computed_orbit_count != spec.declared_orbit_count) {
            rep.orbit_count_ok = false;
            rep.issues.push_back({"orbit_count",
                                  "declared " + std::to_string(spec.declared_orbit_count) +
                                      ", computed " + std::to_string(rep.computed_orbit_count)});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// JSON serialization

namespace {

json quad_to_json(const Quad& q) {
    return json::array({q.a.num, q.a.den, q.b.num, q.b.den});
}

Quad quad_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw tiling_error("quad entry must be [p,q,r,s]");
    return Quad(Rational(j[0].get<int64_t>(), j[1].get<int64_t>()),
                Rational(j[2].get<int64_t>(), j[3].get<int64_t>()));
}

std::string rat_to_string(const Rational& r) { return r.str(); }

Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

std::string save_spec(const TilingSpec& spec) {
    json j;
    j["id"] = spec.id;
    j["type_string"] = spec.type_string;
    j["basis"]["A"] = json::array({quad_to_json(spec.basisA.x), quad_to_json(spec.basisA.y)});
    j["basis"]["B"] = json::array({quad_to_json(spec.basisB.x), quad_to_json(spec.basisB.y)});
    j["vertices"] = json::array();
    for (const auto& v : spec.vertices)
        j["vertices"].push_back(
            {{"pos", json::array({quad_to_json(v.pos.x), quad_to_json(v.pos.y)})},
             {"vtype", v.vtype}});
    j["edges"] = json::array();
    for (const auto& e : spec.edges)
        j["edges"].push_back(json::array({e.i, e.j, json::array({e.off[0], e.off[1]})}));
    j["point_group"] = json::array();
    for (const auto& s : spec.symmetries)
        j["point_group"].push_back(
            {{"label", s.label},
             {"linear", json::array({json::array({s.linear.m11, s.linear.m12}),
                                     json::array({s.linear.m21, s.linear.m22})})},
             {"translation", json::array({rat_to_string(s.t1), rat_to_string(s.t2)})}});
    j["declared_orbit_count"] = spec.declared_orbit_count;
    j["v0"] = spec.v0;
    return j.dump(2);
}

TilingSpec load_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw tiling_error(std::string("tiling spec: JSON parse error: ") + e.what());
    }
    TilingSpec spec;
    try {
        spec.id = j.at("id").get<int>();
        spec.type_string = j.at("type_string").get<std::string>();
        spec.basisA = {quad_from_json(j.at("basis").at("A").at(0)),
                       quad_from_json(j.at("basis").at("A").at(1))};
        spec.basisB = {quad_from_json(j.at("basis").at("B").at(0)),
                       quad_from_json(j.at("basis").at("B").at(1))};
        for (const auto& v : j.at("vertices"))
            spec.vertices.push_back({{quad_from_json(v.at("pos").at(0)),
                                      quad_from_json(v.at("pos").at(1))},
                                     v.at("vtype").get<std::string>()});
        for (const auto& e : j.at("edges"))
            spec.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(),
                                  {e.at(2).at(0).get<int64_t>(), e.at(2).at(1).get<int64_t>()}});
        for (const auto& s : j.at("point_group")) {
            AffineSymmetry sym;
            sym.label = s.at("label").get<std::string>();
            sym.linear = {s.at("linear").at(0).at(0).get<int64_t>(),
                          s.at("linear").at(0).at(1).get<int64_t>(),
                          s.at("linear").at(1).at(0).get<int64_t>(),
                          s.at("linear").at(1).at(1).get<int64_t>()};
            sym.t1 = rat_from_string(s.at("translation").at(0).get<std::string>());
            sym.t2 = rat_from_string(s.at("translation").at(1).get<std::string>());
            spec.symmetries.push_back(sym);
        }
        spec.declared_orbit_count = j.at("declared_orbit_count").get<int>();
        spec.v0 = j.at("v0").get<int>();
    } catch (const json::exception& e) {
        throw tiling_error(std::string("tiling spec: missing or bad field: ") + e.what());
    }
    spec.finalize();
    return spec;
}

const TilingSpec& spec(int ell) {
    const auto& all = builtin_specs();
    if (ell < 1 || ell > (int)all.size())
        throw std::domain_error("tiling id out of range: " + std::to_string(ell));
    return all[ell - 1];
}

std::vector<TilingSpec> specs_with_overrides(const std::string& dir) {
    std::vector<TilingSpec> out = builtin_specs();
    if (dir.empty()) return out;
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw tiling_error("tilings override dir not found: " + dir);
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        TilingSpec s = load_spec(ss.str());
        if (s.id < 1 || s.id > (int)out.size())
            throw tiling_error("override spec has bad id " + std::to_string(s.id));
        out[s.id - 1] = std::move(s);
    }
    return out;
}

}  // namespace tumap::tilings
