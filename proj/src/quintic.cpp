#include "conifold/quintic.hpp"

#include "conifold/rng.hpp"
#include "conifold/zlinalg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <thread>
#include <tuple>

namespace conifold {

namespace {

int mod5(int v) {
    int r = v % 5;
    return r < 0 ? r + 5 : r;
}

int pack_e(const std::array<int, 4>& e) {
    int code = 0;
    for (std::size_t j = 0; j < 4; ++j) code = code * 5 + mod5(e[j]);
    return code;
}

std::array<int, 4> unpack_e(int code) {
    std::array<int, 4> e;
    for (int j = 3; j >= 0; --j) {
        e[static_cast<std::size_t>(j)] = code % 5;
        code /= 5;
    }
    return e;
}

// Signed crossing of one slot's ray pair against a pivot offset p. The slot
// contributes the rays at relative positions d and d+1; whether the perturbed
// arc passes the pivot on the positive or negative side is read off from the
// offset order. Positions d in {2,3} put both rays outside the sector of the
// pivot, so nothing crosses.
int slot_crossing(int d, int p, const std::array<int, 5>& offsets) {
    int eta0 = offsets[static_cast<std::size_t>(d)] - p;
    int eta1 = offsets[static_cast<std::size_t>((d + 1) % 5)] - p;
    switch (d) {
        case 0:
            if (eta0 > 0 && eta1 > 0) return 1;
            if (eta0 < 0 && eta1 < 0) return -1;
            return 0;
        case 1:
            return eta0 < 0 ? 1 : 0;
        case 4:
            return eta1 > 0 ? -1 : 0;
        default:
            return 0;
    }
}

// Vertex coincidences per slot difference: the (delta, delta') ray choices
// with delta - delta' = e (mod 5). Slots two or three steps apart never meet.
std::vector<std::pair<int, int>> vertex_pairs(int e) {
    switch (e) {
        case 0:
            return {{0, 0}, {1, 1}};
        case 1:
            return {{1, 0}};
        case 4:
            return {{0, 1}};
        default:
            return {};
    }
}

std::string format_parameter(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_offsets(const OffsetProfile& profile) {
    std::string out;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t r = 0; r < 5; ++r) {
            if (!out.empty()) out += ',';
            out += std::to_string(profile.beta[j][r]);
        }
    return out;
}

}  // namespace

int cell_dimension(const PhaseCell& cell) {
    int nonzero = 0;
    for (int m : cell.ray)
        if (m != kZeroSlot) ++nonzero;
    return nonzero - 1;
}

void validate(const GroupElement& g) {
    int sum = 0;
    for (int v : g.i) {
        if (v < 0 || v >= 5) throw DataError("group element entries must lie in 0..4");
        sum += v;
    }
    if (sum % 5 != 0) throw DataError("group element exponents must sum to 0 mod 5");
}

std::array<int, 4> label_to_u(const CycleLabel& label) {
    std::array<int, 4> u;
    for (std::size_t j = 0; j < 4; ++j) u[j] = mod5(label.i[j] - label.k);
    return u;
}

CycleLabel u_to_label(const std::array<int, 4>& u) {
    int k = 0;
    for (int v : u) k += v;
    CycleLabel label;
    label.k = mod5(k);
    for (std::size_t j = 0; j < 4; ++j) label.i[j] = mod5(u[j] + label.k);
    return label;
}

int label_index(const CycleLabel& label) {
    int sum = 0;
    for (int v : label.i) {
        if (v < 0 || v >= 5) throw DataError("label exponents must lie in 0..4");
        sum += v;
    }
    if (label.k < 0 || label.k >= 5) throw DataError("label branch must lie in 0..4");
    if (sum % 5 != 0) throw DataError("label exponents must sum to 0 mod 5");
    return ((label.k * 5 + label.i[0]) * 5 + label.i[1]) * 5 + label.i[2];
}

CycleLabel label_from_index(int index) {
    if (index < 0 || index >= 625) throw DataError("label index must lie in 0..624");
    CycleLabel label;
    label.i[2] = index % 5;
    index /= 5;
    label.i[1] = index % 5;
    index /= 5;
    label.i[0] = index % 5;
    label.k = index / 5;
    label.i[3] = mod5(-(label.i[0] + label.i[1] + label.i[2]));
    return label;
}

std::string label_string(const CycleLabel& label) {
    std::string s = "L";
    s += static_cast<char>('0' + label.k);
    s += '.';
    for (int v : label.i) s += static_cast<char>('0' + v);
    return s;
}

std::vector<QuinticCycle> generate_cycles() {
    std::vector<QuinticCycle> cycles;
    cycles.reserve(625);
    for (int idx = 0; idx < 625; ++idx) {
        QuinticCycle cycle;
        cycle.label = label_from_index(idx);
        cycle.cells.reserve(16);
        for (int d = 0; d < 16; ++d) {
            SignedCell sc;
            sc.cell.branch = cycle.label.k;
            int bits = 0;
            for (std::size_t j = 0; j < 4; ++j) {
                int delta = (d >> j) & 1;
                bits += delta;
                sc.cell.ray[j] = mod5(cycle.label.i[j] + delta);
            }
            sc.sign = (bits % 2 == 0) ? 1 : -1;
            cycle.cells.push_back(sc);
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

int branch_transport(int k, const GroupElement& g) {
    validate(g);
    return mod5(k + g.i[4]);
}

CycleLabel act(const GroupElement& g, const CycleLabel& label) {
    validate(g);
    // Multiplying every coordinate by alpha^{-i5} renormalizes the translate
    // back to the i5 = 0 gauge; the branch shift cancels in the process.
    CycleLabel moved;
    moved.k = label.k;
    for (std::size_t j = 0; j < 4; ++j) moved.i[j] = mod5(label.i[j] + g.i[j] - g.i[4]);
    return moved;
}

namespace {

// Does the open stratum of c1 meet the closure of c2? Empty systems meet
// nothing. Otherwise align the branches by rotating c1's representative and
// compare slot by slot: a pinned slot of c1 always lands in the closure, a ray
// slot needs c2's slot to hold a ray at the aligned position.
bool open_meets_closure(const PhaseCell& c1, const PhaseCell& c2) {
    if (cell_dimension(c1) < 0) return false;
    int tw = mod5(c1.branch - c2.branch);
    for (std::size_t j = 0; j < 4; ++j) {
        if (c1.ray[j] == kZeroSlot) continue;
        if (c2.ray[j] == kZeroSlot) return false;
        if (mod5(c2.ray[j] + tw) != mod5(c1.ray[j])) return false;
    }
    return true;
}

}  // namespace

bool cells_disjoint(const PhaseCell& c1, const PhaseCell& c2) {
    return !open_meets_closure(c1, c2) && !open_meets_closure(c2, c1);
}

std::vector<PhaseCell> closure_strata(const QuinticCycle& cycle) {
    std::vector<PhaseCell> strata;
    strata.reserve(80);
    // per slot: pinned to 0, the low ray, or the high ray; skip the empty
    // all-pinned system
    for (int choice = 0; choice < 81; ++choice) {
        int c = choice;
        PhaseCell cell;
        cell.branch = cycle.label.k;
        bool empty = true;
        for (std::size_t j = 0; j < 4; ++j) {
            int pick = c % 3;
            c /= 3;
            if (pick == 0) {
                cell.ray[j] = kZeroSlot;
            } else {
                cell.ray[j] = mod5(cycle.label.i[j] + pick - 1);
                empty = false;
            }
        }
        if (!empty) strata.push_back(cell);
    }
    return strata;
}

bool boundary_vanishes(const QuinticCycle& cycle) {
    // Each top cell is a combinatorial 3-simplex on its four ray choices; a
    // face pins one slot to zero and inherits the alternating slot sign. The
    // two cells sharing a face differ in the pinned slot's ray only, so their
    // contributions must cancel pairwise.
    std::map<std::array<int, 4>, long long> accumulated;
    for (const SignedCell& sc : cycle.cells) {
        for (std::size_t j = 0; j < 4; ++j) {
            std::array<int, 4> face = sc.cell.ray;
            face[j] = kZeroSlot;
            int orient = (j % 2 == 0) ? 1 : -1;
            accumulated[face] += sc.sign * orient;
        }
    }
    for (const auto& entry : accumulated)
        if (entry.second != 0) return false;
    return true;
}

int complex_euler_characteristic(const QuinticCycle& cycle) {
    int chi = 0;
    for (const PhaseCell& cell : closure_strata(cycle))
        chi += (cell_dimension(cell) % 2 == 0) ? 1 : -1;
    return chi;
}

OffsetProfile OffsetProfile::standard() {
    OffsetProfile profile;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t r = 0; r < 5; ++r)
            profile.beta[j][r] = static_cast<int>(5 * j + r) + 1;
    return profile;
}

OffsetProfile OffsetProfile::sampled(std::uint64_t seed) {
    Rng rng(seed);
    OffsetProfile profile;
    std::set<int> used;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t r = 0; r < 5; ++r) {
            int v;
            do {
                v = static_cast<int>(rng.below(10001)) - 5000;
            } while (!used.insert(v).second);
            profile.beta[j][r] = v;
        }
    return profile;
}

void validate(const OffsetProfile& profile) {
    std::set<int> seen;
    for (const auto& row : profile.beta)
        for (int v : row) seen.insert(v);
    if (seen.size() != 20)
        throw DataError("offset profile entries must be pairwise distinct");
}

int pairing_of_difference(const std::array<int, 4>& e, const OffsetProfile& profile) {
    validate(profile);
    int total = 0;
    for (std::size_t j0 = 0; j0 < 4; ++j0) {
        int e0 = mod5(e[j0]);
        for (const auto& [d0, d0p] : vertex_pairs(e0)) {
            // opposite ray choices meet the vertex from opposite sides
            int term = (d0 == d0p) ? 1 : -1;
            int pivot = profile.beta[j0][static_cast<std::size_t>(mod5(e0 + d0p))];
            for (std::size_t j = 0; j < 4 && term != 0; ++j) {
                if (j == j0) continue;
                term *= slot_crossing(mod5(e[j]), pivot, profile.beta[j]);
            }
            total += term;
        }
    }
    return -total;
}

int pairing_of_cycles(const QuinticCycle& x, const QuinticCycle& y, const OffsetProfile& profile) {
    validate(profile);
    std::array<int, 4> ux = label_to_u(x.label);
    std::array<int, 4> uy = label_to_u(y.label);

    // vertices = zero-dimensional closure strata: (slot, branch-aligned ray
    // value, ray choice relative to the label)
    auto vertices = [](const QuinticCycle& cycle) {
        std::vector<std::tuple<std::size_t, int, int>> out;
        for (const PhaseCell& cell : closure_strata(cycle)) {
            if (cell_dimension(cell) != 0) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                if (cell.ray[j] == kZeroSlot) continue;
                int delta = mod5(cell.ray[j] - cycle.label.i[j]);
                out.emplace_back(j, mod5(cell.ray[j] - cell.branch), delta);
            }
        }
        return out;
    };

    int total = 0;
    for (const auto& [jx, vx, dx] : vertices(x)) {
        for (const auto& [jy, vy, dy] : vertices(y)) {
            if (jx != jy || vx != vy) continue;
            int term = (dx == dy) ? 1 : -1;
            int pivot = profile.beta[jx][static_cast<std::size_t>(dx)];
            for (std::size_t j = 0; j < 4 && term != 0; ++j) {
                if (j == jx) continue;
                term *= slot_crossing(mod5(uy[j] - ux[j]), pivot, profile.beta[j]);
            }
            total += term;
        }
    }
    return -total;
}

bool cycles_share_points(const QuinticCycle& x, const QuinticCycle& y) {
    std::array<int, 4> ux = label_to_u(x.label);
    std::array<int, 4> uy = label_to_u(y.label);
    // any shared point forces a shared vertex: per slot, the branch-aligned
    // ray values u + {0,1} must overlap
    for (std::size_t j = 0; j < 4; ++j)
        for (int dx = 0; dx < 2; ++dx)
            for (int dy = 0; dy < 2; ++dy)
                if (mod5(ux[j] + dx) == mod5(uy[j] + dy)) return true;
    return false;
}

IntegerMatrix pairing_matrix(const std::vector<QuinticCycle>& cycles, double lambda,
                             const OffsetProfile& profile, int threads) {
    validate(profile);
    if (!(lambda > 0.0 && lambda < 5.0))
        throw DataError("lambda must lie in the open interval (0,5)");
    if (threads < 1) throw DataError("thread count must be positive");

    std::array<int, 625> symbol;
    for (int code = 0; code < 625; ++code)
        symbol[static_cast<std::size_t>(code)] = pairing_of_difference(unpack_e(code), profile);

    const std::size_t n = cycles.size();
    std::vector<std::array<int, 4>> u(n);
    for (std::size_t x = 0; x < n; ++x) u[x] = label_to_u(cycles[x].label);

    IntegerMatrix m(n, n);
    auto fill_rows = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t x = lo; x < hi; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                std::array<int, 4> e;
                for (std::size_t j = 0; j < 4; ++j) e[j] = u[y][j] - u[x][j];
                m.a[x * n + y] = symbol[static_cast<std::size_t>(pack_e(e))];
            }
    };

    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    if (workers <= 1) {
        fill_rows(0, n);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t lo = n * w / workers;
            std::size_t hi = n * (w + 1) / workers;
            pool.emplace_back(fill_rows, lo, hi);
        }
        for (std::thread& t : pool) t.join();
    }
    return m;
}

VanishingClasses vanishing_classes(const IntegerMatrix& pairing) {
    if (pairing.rows != 625 || pairing.cols != 625)
        throw DataError("vanishing classes need the full 625 x 625 pairing matrix");
    VanishingClasses vc;
    for (int c1 = 0; c1 < 5; ++c1)
        for (int c2 = 0; c2 < 5; ++c2)
            for (int c3 = 0; c3 < 5; ++c3) {
                std::array<int, 4> node = {c1, c2, c3, mod5(-(c1 + c2 + c3))};
                vc.nodes.push_back(node);
                std::string label = "v";
                for (int v : node) label += static_cast<char>('0' + v);
                vc.labels.push_back(label);
                vc.spanning_index.push_back(label_index(CycleLabel{1, node}));
            }
    vc.classes = take_rows(pairing, vc.spanning_index);
    return vc;
}

CycleConfiguration vanishing_configuration(const IntegerMatrix& pairing) {
    VanishingClasses vc = vanishing_classes(pairing);
    CycleConfiguration config;
    config.labels = vc.labels;
    config.classes = vc.classes;

    std::vector<std::size_t> columns;
    columns.reserve(vc.spanning_index.size());
    for (int idx : vc.spanning_index) columns.push_back(static_cast<std::size_t>(idx));
    config.pairing = take_cols(take_rows(pairing, vc.spanning_index), columns);

    const int n = static_cast<int>(vc.labels.size());
    config.disjoint.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i) config.disjoint[static_cast<std::size_t>(i)].push_back(j);

    config.provenance.generator = "quintic-vanishing";
    config.provenance.parameters = {{"nodes", "125"}};
    validate(config);
    return config;
}

CycleConfiguration quintic_configuration(double lambda, const OffsetProfile& profile,
                                         int threads) {
    std::vector<QuinticCycle> cycles = generate_cycles();
    IntegerMatrix m = pairing_matrix(cycles, lambda, profile, threads);
    VanishingClasses vc = vanishing_classes(m);

    CycleConfiguration config;
    const std::size_t spanning = 625, nodes = 125, total = spanning + nodes;

    config.labels.reserve(total);
    for (const QuinticCycle& cycle : cycles) config.labels.push_back(label_string(cycle.label));
    for (const std::string& label : vc.labels) config.labels.push_back(label);

    config.classes = IntegerMatrix(total, spanning);
    for (std::size_t x = 0; x < spanning; ++x)
        for (std::size_t y = 0; y < spanning; ++y) config.classes.at(x, y) = m.at(x, y);
    for (std::size_t t = 0; t < nodes; ++t)
        for (std::size_t y = 0; y < spanning; ++y)
            config.classes.at(spanning + t, y) = vc.classes.at(t, y);

    // every row is homologous to a spanning cycle, so the extended pairing is
    // the symbol of u differences throughout
    std::vector<std::array<int, 4>> u(total);
    for (std::size_t x = 0; x < spanning; ++x) u[x] = label_to_u(cycles[x].label);
    for (std::size_t t = 0; t < nodes; ++t)
        u[spanning + t] = label_to_u(CycleLabel{1, vc.nodes[t]});

    std::array<int, 625> symbol;
    for (int code = 0; code < 625; ++code)
        symbol[static_cast<std::size_t>(code)] = pairing_of_difference(unpack_e(code), profile);

    IntegerMatrix p(total, total);
    for (std::size_t x = 0; x < total; ++x)
        for (std::size_t y = 0; y < total; ++y) {
            std::array<int, 4> e;
            for (std::size_t j = 0; j < 4; ++j) e[j] = u[y][j] - u[x][j];
            p.at(x, y) = symbol[static_cast<std::size_t>(pack_e(e))];
        }
    config.pairing = std::move(p);

    config.disjoint.resize(total);
    for (std::size_t x = 0; x < spanning; ++x)
        for (std::size_t y = 0; y < spanning; ++y) {
            if (x == y) continue;
            bool separated = true;
            for (std::size_t j = 0; j < 4; ++j) {
                int e = mod5(u[y][j] - u[x][j]);
                if (e != 2 && e != 3) separated = false;
            }
            if (separated) config.disjoint[x].push_back(static_cast<int>(y));
        }
    for (std::size_t s = 0; s < nodes; ++s)
        for (std::size_t t = 0; t < nodes; ++t)
            if (s != t)
                config.disjoint[spanning + s].push_back(static_cast<int>(spanning + t));

    config.provenance.generator = "gen-quintic";
    config.provenance.parameters = {{"lambda", format_parameter(lambda)},
                                    {"offsets", format_offsets(profile)}};
    validate(config);
    return config;
}

bool real_solution_check(double lambda) {
    // On positive reals the power mean bound gives
    // 5^5 (x1^5+..+x4^5)^4 >= 5^5 * 4^4 * (x1..x4)^5, with equality only on
    // the diagonal, and the skewed directions push the ratio to infinity; so
    // a positive solution of the critical equation exists exactly for
    // lambda^5 >= 5^5. Witness at the boundary: x = (1,1,1,1), lambda = 5.
    return lambda >= 5.0;
}

SixManifoldTopology quintic_topology() {
    SixManifoldTopology t;
    t.b2 = 1;
    t.b3 = 204;
    t.b4 = 1;
    t.euler = -200;
    t.simply_connected = true;
    t.c1_zero = true;
    return t;
}

PropositionReport reproduce_proposition(std::uint64_t seed, const OffsetProfile& profile,
                                        int threads) {
    PropositionReport report;
    std::vector<QuinticCycle> cycles = generate_cycles();
    IntegerMatrix m = pairing_matrix(cycles, 1.0, profile, threads);
    report.pairing_rank = rank_exact(m);

    CycleConfiguration config = vanishing_configuration(m);
    report.vanishing_span = rank_exact(config.classes);

    SearchReport search = search_good_subsets(config, 102, 125, seed);
    report.notes = search.notes;

    report.pass = (report.pairing_rank == 204) && (report.vanishing_span == 101);
    SixManifoldTopology start = quintic_topology();
    for (const SearchResult& r : search.results) {
        PropositionRow row;
        row.size = r.size;
        row.found = r.found;
        row.span = r.span;
        row.subset = r.subset;
        row.relation = r.relation;
        if (r.found && r.span == 101) {
            SixManifoldTopology after = conifold_transition(start, r.size, r.span, true);
            row.b2 = after.b2;
            row.b3 = after.b3;
        } else {
            report.pass = false;
        }
        report.table.push_back(std::move(row));
    }
    if (report.table.size() != 24) report.pass = false;
    return report;
}

}  // namespace conifold
