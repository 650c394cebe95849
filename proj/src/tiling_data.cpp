// Geometry of the twenty 2-uniform plane tilings E1..E20 and the seven
// relevant Archimedean tilings E21..E27, entered in Euclidean coordinates
// over Q[sqrt(3)] and converted to exact lattice data by build_tiling().
//
// None of this data is trusted as entered: validate() re-derives face
// cycles, symmetry closure and orbit counts, and the enumeration crosscheck
// ties every tiling to its published counting column.  Conventions:
//  - unit edge lengths except E16/E27, which use combinatorially equivalent
//    rational embeddings (their regular forms need sqrt(2));
//  - triangular-net tilings are built by deleting vertices of the unit net;
//  - origins sit at the highest-symmetry point so point symmetries carry
//    zero translation and glides carry half-lattice ones.
#include "tiling_build.hpp"

namespace tumap::tilings {

namespace {

QuadPoint net(int64_t i, int64_t j) {
    // i*(1,0) + j*(1/2, sqrt3/2)
    return {Quad(Rational(2 * i + j, 2)), Quad(Rational(0), Rational(j, 2))};
}

QuadPoint qp(Quad x, Quad y) { return {x, y}; }

QuadPoint apply(const QuadMat& m, const QuadPoint& p) { return m.apply(p); }

RawSymmetry rot_sym(const std::string& label, int k30) {
    return {label, rot30(k30), {}, false};
}
RawSymmetry refl_sym(const std::string& label, int j15) {
    return {label, refl15(j15), {}, false};
}
RawSymmetry glide_sym(const std::string& label, int j15) {
    return {label, refl15(j15), {}, true};
}
RawSymmetry rot_glide_sym(const std::string& label, int k30) {
    return {label, rot30(k30), {}, true};
}

std::vector<RawSymmetry> d6_syms() {
    return {rot_sym("id", 0),     rot_sym("rho60", 2),  rot_sym("rho120", 4),
            rot_sym("tau", 6),    rot_sym("rho240", 8), rot_sym("rho300", 10),
            refl_sym("r1", 0),    refl_sym("r4", 2),    refl_sym("r3", 4),
            refl_sym("r6", 6),    refl_sym("r2", 8),    refl_sym("r5", 10)};
}

std::vector<RawSymmetry> z6_syms() {
    return {rot_sym("id", 0),  rot_sym("rho60", 2),  rot_sym("rho120", 4),
            rot_sym("tau", 6), rot_sym("rho240", 8), rot_sym("rho300", 10)};
}

std::vector<RawSymmetry> d4_syms() {
    return {rot_sym("id", 0),   rot_sym("psi90", 3), rot_sym("tau", 6), rot_sym("psi270", 9),
            refl_sym("r1'", 0), refl_sym("r2'", 6),  refl_sym("r3'", 3), refl_sym("r4'", 9)};
}

// klein four-group about the origin; mirror axes at 15*j1 and 15*j1+90 deg
std::vector<RawSymmetry> z2z2_syms(int j1) {
    return {rot_sym("id", 0), rot_sym("tau", 6), refl_sym("m1", j1), refl_sym("m2", j1 + 6)};
}

// --- triangular-net removal family -----------------------------------------

// removes net vertices where `removed` is true; vertex types follow from the
// pattern of removed neighbours
RawTiling net_removal(int id, const std::string& type_string, QuadPoint A, QuadPoint B,
                      const std::function<bool(int64_t, int64_t)>& removed,
                      std::vector<RawSymmetry> syms, int orbit_count, int v0) {
    RawTiling t;
    t.id = id;
    t.type_string = type_string;
    t.A = A;
    t.B = B;
    t.syms = std::move(syms);
    t.declared_orbit_count = orbit_count;
    t.v0 = v0;
    const int64_t W = 7;
    const int64_t nb[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    for (int64_t i = -W; i <= W; ++i) {
        for (int64_t j = -W; j <= W; ++j) {
            if (removed(i, j)) continue;
            // classify by removed neighbours
            std::vector<std::pair<int64_t, int64_t>> rm;
            for (auto& d : nb)
                if (removed(i + d[0], j + d[1])) rm.push_back({i + d[0], j + d[1]});
            std::string vtype;
            if (rm.size() == 0)
                vtype = "[3^6]";
            else if (rm.size() == 1)
                vtype = "[3^4,6^1]";
            else if (rm.size() == 2) {
                // loeschian norm of the difference: 3 -> adjacent holes, 4 -> opposite
                int64_t di = rm[0].first - rm[1].first, dj = rm[0].second - rm[1].second;
                int64_t norm = di * di + di * dj + dj * dj;
                vtype = (norm == 3) ? "[3^2,6^2]" : "[3^1,6^1,3^1,6^1]";
            } else {
                vtype = "[invalid]";
            }
            t.verts.push_back({net(i, j), vtype});
        }
    }
    return t;
}

// --- assembled spec list ----------------------------------------------------

std::vector<TilingSpec> make_all() {
    std::vector<RawTiling> raw(28);
    Quad r3h(Rational(0), Rational(1, 2));           // sqrt3/2
    Quad one(1), half(Rational(1, 2));
    QuadPoint zero{};

    // E1 [3^6;3^4,6^1], v0 12: net minus the index-13 sublattice <3u+w, rot60>
    raw[1] = net_removal(
        1, "[3^6;3^4,6^1]", net(3, 1), net(-1, 4),
        [](int64_t i, int64_t j) { return (4 * i + j) % 13 == 0; }, z6_syms(), 2, 12);

    // E2 [3^6;3^4,6^1], v0 8: net minus <3u, 3w>
    raw[2] = net_removal(
        2, "[3^6;3^4,6^1]", net(3, 0), net(0, 3),
        [](int64_t i, int64_t j) { return i % 3 == 0 && j % 3 == 0; }, d6_syms(), 2, 8);

    // E7 [3^6;3^2,6^2], v0 7: honeycomb of holes around a surviving vertex
    raw[7] = net_removal(
        7, "[3^6;3^2,6^2]", net(3, 0), net(0, 3),
        [](int64_t i, int64_t j) {
            int64_t a = ((i % 3) + 3) % 3, b = ((j % 3) + 3) % 3;
            return (a == 1 && b == 1) || (a == 2 && b == 2);
        },
        d6_syms(), 2, 7);

    // E8 [3^2,6^2;3^4,6^1], v0 4: chains of edge-sharing holes
    raw[8] = net_removal(
        8, "[3^2,6^2;3^4,6^1]", net(1, 1), net(3, -2),
        [](int64_t i, int64_t j) { return ((i - j) % 5 + 5) % 5 == 0; },
        z2z2_syms(2), 2, 4);

    // E15 [3^2,6^2;3^1,6^1,3^1,6^1], v0 3
    raw[15] = net_removal(
        15, "[3^2,6^2;3^1,6^1,3^1,6^1]", net(2, 0), net(-1, 2),
        [](int64_t i, int64_t j) {
            if (((j % 2) + 2) % 2 != 0) return false;
            return ((2 * i + j) % 4 + 4) % 4 == 0;
        },
        z2z2_syms(0), 2, 3);

    // E24 [3,6,3,6] kagome, v0 3: net minus <2u, 2w>
    raw[24] = net_removal(
        24, "[3^1,6^1,3^1,6^1]", net(2, 0), net(0, 2),
        [](int64_t i, int64_t j) { return i % 2 == 0 && j % 2 == 0; }, d6_syms(), 1, 3);

    // --- hexagonal-family Archimedean --------------------------------------

    auto hex_corners = [&](int offset30, const std::string& vtype,
                           std::vector<std::pair<QuadPoint, std::string>>& out) {
        for (int k = 0; k < 6; ++k)
            out.push_back({apply(rot30(2 * k + offset30), qp(one, Quad(0))), vtype});
    };
    auto ring12 = [&](const std::string& vtype,
                      std::vector<std::pair<QuadPoint, std::string>>& out) {
        QuadPoint up{one + r3h, half}, dn{one + r3h, Quad(0) - half};
        for (int k = 0; k < 6; ++k) {
            out.push_back({apply(rot30(2 * k), up), vtype});
            out.push_back({apply(rot30(2 * k), dn), vtype});
        }
    };
    auto twelve_corners = [&](const std::string& vtype,
                              std::vector<std::pair<QuadPoint, std::string>>& out) {
        QuadPoint c{one + r3h, half};
        for (int k = 0; k < 12; ++k) out.push_back({apply(rot30(k), c), vtype});
    };

    // E21 [3,4,6,4], v0 6
    raw[21].id = 21;
    raw[21].type_string = "[3^1,4^1,6^1,4^1]";
    raw[21].A = apply(rot30(1), qp(one + Quad(Rational(0), Rational(1)), Quad(0)));  // (1+r3) at 30 deg
    raw[21].B = qp(Quad(0), one + Quad(Rational(0), Rational(1)));                   // (0, 1+r3)
    hex_corners(0, "[3^1,4^1,6^1,4^1]", raw[21].verts);
    raw[21].syms = d6_syms();
    raw[21].declared_orbit_count = 1;
    raw[21].v0 = 6;

    // E5 [3^6;3^2,4,3,4], v0 7: E21 with coned hexagons
    raw[5] = raw[21];
    raw[5].id = 5;
    raw[5].type_string = "[3^6;3^2,4^1,3^1,4^1]";
    raw[5].verts.clear();
    hex_corners(0, "[3^2,4^1,3^1,4^1]", raw[5].verts);
    raw[5].verts.push_back({zero, "[3^6]"});
    raw[5].declared_orbit_count = 2;
    raw[5].v0 = 7;

    // E22 [3,12^2], v0 6
    raw[22].id = 22;
    raw[22].type_string = "[3^1,12^2]";
    {
        Quad s = Quad(2) + Quad(Rational(0), Rational(1));  // 2 + r3
        raw[22].A = qp(s, Quad(0));
        raw[22].B = apply(rot30(2), raw[22].A);
    }
    twelve_corners("[3^1,12^2]", raw[22].verts);
    raw[22].syms = d6_syms();
    raw[22].declared_orbit_count = 1;
    raw[22].v0 = 6;

    // E25 [3^4,6] snub hexagonal, v0 6, rotations only
    raw[25].id = 25;
    raw[25].type_string = "[3^4,6^1]";
    raw[25].A = net(2, 1);
    raw[25].B = net(-1, 3);
    hex_corners(0, "[3^4,6^1]", raw[25].verts);
    raw[25].syms = z6_syms();
    raw[25].declared_orbit_count = 1;
    raw[25].v0 = 6;

    // E26 [4,6,12], v0 12
    raw[26].id = 26;
    raw[26].type_string = "[4^1,6^1,12^1]";
    {
        Quad s = Quad(3) + Quad(Rational(0), Rational(1));  // 3 + r3
        raw[26].A = qp(s, Quad(0));
        raw[26].B = apply(rot30(2), raw[26].A);
    }
    twelve_corners("[4^1,6^1,12^1]", raw[26].verts);
    raw[26].syms = d6_syms();
    raw[26].declared_orbit_count = 1;
    raw[26].v0 = 12;

    // E6 [3^6;3^2,4,12], v0 14: E26 with coned hexagons
    raw[6] = raw[26];
    raw[6].id = 6;
    raw[6].type_string = "[3^6;3^2,4^1,12^1]";
    raw[6].verts.clear();
    twelve_corners("[3^2,4^1,12^1]", raw[6].verts);
    {
        QuadPoint h1{(raw[6].A.x + raw[6].B.x) / Quad(3), (raw[6].A.y + raw[6].B.y) / Quad(3)};
        QuadPoint h2{h1.x * Quad(2), h1.y * Quad(2)};
        raw[6].verts.push_back({h1, "[3^6]"});
        raw[6].verts.push_back({h2, "[3^6]"});
    }
    raw[6].declared_orbit_count = 2;
    raw[6].v0 = 14;

    // E11 [3^3,4^2;3,4,6,4], v0 12: hexagon flowers joined by square dominoes
    raw[11].id = 11;
    raw[11].type_string = "[3^3,4^2;3^1,4^1,6^1,4^1]";
    {
        Quad s = Quad(2) + Quad(Rational(0), Rational(1));
        raw[11].A = qp(s, Quad(0));
        raw[11].B = apply(rot30(2), raw[11].A);
    }
    hex_corners(1, "[3^1,4^1,6^1,4^1]", raw[11].verts);
    ring12("[3^3,4^2]", raw[11].verts);
    raw[11].syms = d6_syms();
    raw[11].declared_orbit_count = 2;
    raw[11].v0 = 12;

    // E14 [3,4,6,4;3^2,4,3,4], v0 12: same flowers glued triangle-to-triangle
    raw[14] = raw[11];
    raw[14].id = 14;
    raw[14].type_string = "[3^1,4^1,6^1,4^1;3^2,4^1,3^1,4^1]";
    raw[14].verts.clear();
    hex_corners(1, "[3^1,4^1,6^1,4^1]", raw[14].verts);
    ring12("[3^2,4^1,3^1,4^1]", raw[14].verts);
    raw[14].A = apply(rot30(1), raw[11].A);
    raw[14].B = apply(rot30(2), raw[14].A);

    // E17 [3,4,6,4;3,4^2,6], v0 18: E21 with every third flower core twisted
    raw[17].id = 17;
    raw[17].type_string = "[3^1,4^1,6^1,4^1;3^1,4^2,6^1]";
    {
        Quad s = one + Quad(Rational(0), Rational(1));  // 1 + r3
        QuadPoint u1 = apply(rot30(1), qp(s, Quad(0)));
        QuadPoint u2 = apply(rot30(3), qp(s, Quad(0)));
        raw[17].A = {u1.x + u2.x, u1.y + u2.y};
        raw[17].B = apply(rot30(2), raw[17].A);
    }
    hex_corners(1, "[3^1,4^1,6^1,4^1]", raw[17].verts);
    ring12("[3^1,4^2,6^1]", raw[17].verts);
    raw[17].syms = d6_syms();
    raw[17].declared_orbit_count = 2;
    raw[17].v0 = 18;

    // E20 [4,6,12;3,4,6,4], v0 18: spread 12-gons bridged by hexagons
    raw[20].id = 20;
    raw[20].type_string = "[4^1,6^1,12^1;3^1,4^1,6^1,4^1]";
    {
        Quad s = Quad(2) + Quad(Rational(0), Rational(2));  // 2 + 2 r3
        raw[20].A = qp(s, Quad(0));
        raw[20].B = apply(rot30(2), raw[20].A);
    }
    twelve_corners("[4^1,6^1,12^1]", raw[20].verts);
    {
        Quad x = one + Quad(Rational(0), Rational(1));  // 1 + r3
        for (int k = 0; k < 6; ++k) {
            raw[20].verts.push_back(
                {apply(rot30(2 * k), qp(x, one)), "[3^1,4^1,6^1,4^1]"});
            raw[20].verts.push_back(
                {apply(rot30(2 * k), qp(x, Quad(0) - one)), "[3^1,4^1,6^1,4^1]"});
        }
    }
    raw[20].syms = d6_syms();
    raw[20].declared_orbit_count = 2;
    raw[20].v0 = 18;

    // --- square-family ------------------------------------------------------

    // E27 [4,8^2] truncated square, rational embedding
    raw[27].id = 27;
    raw[27].type_string = "[4^1,8^2]";
    raw[27].A = qp(one, Quad(0));
    raw[27].B = qp(Quad(0), one);
    {
        const std::pair<Rational, Rational> pts[] = {
            {{1, 2}, {1, 3}}, {{1, 2}, {-1, 3}}, {{1, 3}, {1, 2}}, {{-1, 3}, {1, 2}}};
        for (const auto& [x, y] : pts)
            raw[27].verts.push_back({qp(Quad(x), Quad(y)), "[4^1,8^2]"});
    }
    raw[27].syms = d4_syms();
    raw[27].declared_orbit_count = 1;
    raw[27].v0 = 4;
    raw[27].allowed_dist2 = {Quad(Rational(1, 18)), Quad(Rational(4, 9))};

    // E16 [3,12^2;3,4,3,12], rational embedding
    raw[16].id = 16;
    raw[16].type_string = "[3^1,12^2;3^1,4^1,3^1,12^1]";
    raw[16].A = qp(one, Quad(0));
    raw[16].B = qp(Quad(0), one);
    {
        const std::pair<Rational, Rational> ring[] = {
            {{1, 2}, {1, 6}}, {{1, 2}, {-1, 6}}, {{1, 6}, {1, 2}}, {{-1, 6}, {1, 2}}};
        for (const auto& [x, y] : ring)
            raw[16].verts.push_back({qp(Quad(x), Quad(y)), "[3^1,12^2]"});
        const std::pair<Rational, Rational> diag[] = {
            {{1, 3}, {1, 3}}, {{-1, 3}, {1, 3}}, {{1, 3}, {-1, 3}}, {{-1, 3}, {-1, 3}}};
        for (const auto& [x, y] : diag)
            raw[16].verts.push_back({qp(Quad(x), Quad(y)), "[3^1,4^1,3^1,12^1]"});
    }
    raw[16].syms = d4_syms();
    raw[16].declared_orbit_count = 2;
    raw[16].v0 = 8;
    raw[16].allowed_dist2 = {Quad(Rational(1, 18)), Quad(Rational(1, 9))};

    // E23 [3^2,4,3,4] snub square: rotations at a 4-centre, reflections are
    // glides / off-centre mirrors with half-lattice translations
    raw[23].id = 23;
    raw[23].type_string = "[3^2,4^1,3^1,4^1]";
    {
        Quad s = one + Quad(Rational(0), Rational(1));  // 1 + r3
        raw[23].A = qp(s, Quad(0));
        raw[23].B = qp(Quad(0), s);
    }
    {
        const std::pair<Quad, Quad> corners[] = {{half, r3h},
                                                 {Quad(0) - r3h, half},
                                                 {Quad(0) - half, Quad(0) - r3h},
                                                 {r3h, Quad(0) - half}};
        for (const auto& [x, y] : corners)
            raw[23].verts.push_back({qp(x, y), "[3^2,4^1,3^1,4^1]"});
    }
    raw[23].syms = {rot_sym("id", 0),    rot_sym("psi90", 3), rot_sym("tau", 6),
                    rot_sym("psi270", 9), glide_sym("G1", 0),  glide_sym("G2", 6),
                    glide_sym("d1", 3),   glide_sym("d2", 9)};
    raw[23].declared_orbit_count = 1;
    raw[23].v0 = 4;
    raw[23].allowed_dist2 = {Quad(2)};  // this embedding uses side sqrt(2)

    // --- square/triangle strip family ---------------------------------------

    Quad sq_h = one + Quad(Rational(0), Rational(1));  // 1 + r3

    // E4 [3^6;3^3,4^2], v0 3: square row + two triangle rows (mirror family g)
    raw[4].id = 4;
    raw[4].type_string = "[3^6;3^3,4^2]";
    raw[4].A = qp(one, Quad(0));
    raw[4].B = qp(Quad(0), sq_h);
    raw[4].origin = qp(Quad(0), one + r3h);
    raw[4].verts = {{qp(Quad(0), Quad(0)), "[3^3,4^2]"},
                    {qp(Quad(0), one), "[3^3,4^2]"},
                    {qp(half, one + r3h), "[3^6]"}};
    raw[4].syms = z2z2_syms(0);
    raw[4].declared_orbit_count = 2;
    raw[4].v0 = 3;

    // E3 [3^6;3^3,4^2], v0 4: square row + three triangle rows (family f3)
    raw[3].id = 3;
    raw[3].type_string = "[3^6;3^3,4^2]";
    raw[3].A = qp(one, Quad(0));
    raw[3].B = qp(half, one + Quad(Rational(0), Rational(3, 2)));  // (1/2, 1 + 3 r3/2)
    raw[3].origin = qp(half, Quad(Rational(3, 2)) + Quad(Rational(0), Rational(3, 2)));
    raw[3].verts = {{qp(Quad(0), Quad(0)), "[3^3,4^2]"},
                    {qp(Quad(0), one), "[3^3,4^2]"},
                    {qp(half, one + r3h), "[3^6]"},
                    {qp(Quad(0), one + Quad(Rational(0), Rational(1))), "[3^6]"}};
    raw[3].syms = z2z2_syms(0);
    raw[3].declared_orbit_count = 2;
    raw[3].v0 = 4;

    // E12 [4^4;3^3,4^2], v0 3: two square rows + one triangle row
    raw[12].id = 12;
    raw[12].type_string = "[4^4;3^3,4^2]";
    raw[12].A = qp(one, Quad(0));
    raw[12].B = qp(half, Quad(2) + r3h);
    raw[12].origin = qp(Quad(0), one);
    raw[12].verts = {{qp(Quad(0), Quad(0)), "[3^3,4^2]"},
                     {qp(Quad(0), one), "[4^4]"},
                     {qp(Quad(0), Quad(2)), "[3^3,4^2]"}};
    raw[12].syms = z2z2_syms(0);
    raw[12].declared_orbit_count = 2;
    raw[12].v0 = 3;

    // E13 [4^4;3^3,4^2], v0 4: three square rows + one triangle row
    raw[13].id = 13;
    raw[13].type_string = "[4^4;3^3,4^2]";
    raw[13].A = qp(one, Quad(0));
    raw[13].B = qp(half, Quad(3) + r3h);
    raw[13].origin = qp(Quad(0), Quad(Rational(3, 2)));
    raw[13].verts = {{qp(Quad(0), Quad(0)), "[3^3,4^2]"},
                     {qp(Quad(0), one), "[4^4]"},
                     {qp(Quad(0), Quad(2)), "[4^4]"},
                     {qp(Quad(0), Quad(3)), "[3^3,4^2]"}};
    raw[13].syms = z2z2_syms(0);
    raw[13].declared_orbit_count = 2;
    raw[13].v0 = 4;

    // E18 [3,4^2,6;3,6,3,6], v0 5: aligned kagome columns + square columns
    raw[18].id = 18;
    raw[18].type_string = "[3^1,4^2,6^1;3^1,6^1,3^1,6^1]";
    raw[18].A = qp(Quad(Rational(0), Rational(1)) + one, Quad(0));  // (r3+1, 0)
    raw[18].B = qp(Quad(0), Quad(2));
    raw[18].verts = {{qp(Quad(0), one), "[3^1,6^1,3^1,6^1]"},
                     {qp(r3h, half), "[3^1,4^2,6^1]"},
                     {qp(r3h, Quad(0) - half), "[3^1,4^2,6^1]"},
                     {qp(Quad(0) - r3h, half), "[3^1,4^2,6^1]"},
                     {qp(Quad(0) - r3h, Quad(0) - half), "[3^1,4^2,6^1]"}};
    raw[18].syms = z2z2_syms(0);
    raw[18].declared_orbit_count = 2;
    raw[18].v0 = 5;

    // E19 [3,6,3,6;3,4^2,6], v0 5: same columns staggered by half a period
    raw[19] = raw[18];
    raw[19].id = 19;
    raw[19].type_string = "[3^1,6^1,3^1,6^1;3^1,4^2,6^1]";
    raw[19].A = qp(Quad(Rational(0), Rational(1)) + one, one);  // (r3+1, 1)

    // --- E9/E10: domino square/triangle tilings (from the quotient search) --

    auto tup = [](int64_t xa, int64_t xb, int64_t ya, int64_t yb) {
        return qp(Quad(Rational(xa, 2), Rational(xb, 2)), Quad(Rational(ya, 2), Rational(yb, 2)));
    };

    // E9 [3^3,4^2;3^2,4,3,4], v0 12: square-lattice, p4g-like symmetry
    raw[9].id = 9;
    raw[9].type_string = "[3^3,4^2;3^2,4^1,3^1,4^1]";
    raw[9].A = tup(-3, -2, 0, -1);
    raw[9].B = tup(0, 1, -3, -2);
    raw[9].origin = qp(Quad(Rational(-1, 4), Rational(-1, 2)), Quad(Rational(1, 2), Rational(-1, 4)));
    {
        const int64_t V[12][4] = {{-3, -1, -1, -3}, {-2, -2, 0, -2}, {-2, -1, -1, -2},
                                  {-1, -2, 0, -1},  {-1, -1, -1, -3}, {-1, -1, -1, -1},
                                  {-1, -1, 1, -1},  {-1, 0, 0, -1},   {0, -1, -1, -2},
                                  {0, 0, -2, -2},   {0, 0, 0, -2},    {0, 0, 0, 0}};
        const bool square_pair[12] = {false, true, true, false, false, false,
                                      true,  false, false, true,  false, false};
        for (int i = 0; i < 12; ++i)
            raw[9].verts.push_back({tup(V[i][0], V[i][1], V[i][2], V[i][3]),
                                    square_pair[i] ? "[3^3,4^2]" : "[3^2,4^1,3^1,4^1]"});
    }
    raw[9].syms = {rot_sym("id", 0),        rot_glide_sym("psi90", 3),
                   rot_glide_sym("tau", 6), rot_glide_sym("psi270", 9),
                   glide_sym("G1", 1),      glide_sym("G2", 4),
                   glide_sym("G3", 7),      glide_sym("G4", 10)};
    raw[9].declared_orbit_count = 2;
    raw[9].v0 = 12;

    // E10 [3^3,4^2;3^2,4,3,4], v0 8: pgg
    raw[10].id = 10;
    raw[10].type_string = "[3^3,4^2;3^2,4^1,3^1,4^1]";
    raw[10].A = tup(-2, -1, -1, 0);
    raw[10].B = tup(2, 0, -4, -2);
    raw[10].origin = qp(Quad(Rational(0), Rational(-1, 4)), Quad(Rational(-1, 4), Rational(0)));
    {
        const int64_t V[8][4] = {{0, -1, -3, -2}, {0, -1, -3, 0}, {0, -1, -1, 0}, {0, 0, -2, 0},
                                 {0, 0, 0, 0},    {1, -1, -3, -1}, {1, 0, -2, -1}, {2, -1, -3, -2}};
        const bool square_pair[8] = {false, false, true, false, true, true, true, false};
        for (int i = 0; i < 8; ++i)
            raw[10].verts.push_back({tup(V[i][0], V[i][1], V[i][2], V[i][3]),
                                     square_pair[i] ? "[3^3,4^2]" : "[3^2,4^1,3^1,4^1]"});
    }
    raw[10].syms = {rot_sym("id", 0), rot_glide_sym("tau", 6), glide_sym("G1", 1),
                    glide_sym("G2", 7)};
    raw[10].declared_orbit_count = 2;
    raw[10].v0 = 8;

    std::vector<TilingSpec> specs;
    specs.reserve(27);
    for (int id = 1; id <= 27; ++id) specs.push_back(build_tiling(raw[id]));
    return specs;
}

}  // namespace

const std::vector<TilingSpec>& builtin_specs() {
    static const std::vector<TilingSpec> specs = make_all();
    return specs;
}

}  // namespace tumap::tilings
