#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncp2/cubic_invariants.hpp"
#include "ncp2/fields.hpp"
#include "ncp2/hesse.hpp"
#include "ncp2/hessian_group.hpp"
#include "ncp2/laurent.hpp"
#include "ncp2/quadratic.hpp"
#include "ncp2/quiver.hpp"
#include "ncp2/tensor.hpp"

using namespace ncp2;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "ncp2/1";

// Deterministic generator for seeded draws, identical across platforms.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed * 2654435761u + 1) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    long range(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

int exit_code_of(const std::exception& e) {
    if (dynamic_cast<const ResourceCapError*>(&e) != nullptr) return 3;
    if (dynamic_cast<const InvalidInputError*>(&e) != nullptr) return 2;
    if (dynamic_cast<const InternalInconsistencyError*>(&e) != nullptr) return 4;
    return 4;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

template <class F>
std::array<typename F::Elt, 3> parse_triple(const F& f, const std::string& csv) {
    auto parts = split_csv(csv);
    if (parts.size() != 3)
        throw InvalidInputError("expected three comma-separated coordinates, got '" + csv + "'");
    return {f.parse(parts[0]), f.parse(parts[1]), f.parse(parts[2])};
}

template <class F>
std::string field_label(const F& f) {
    if (f.characteristic() == 0) return F::name();
    return std::string("prime:") + std::to_string(f.characteristic());
}

struct FieldChoice {
    std::string kind;
    std::uint64_t p = 0;
};

FieldChoice parse_field_spec(const std::string& s) {
    if (s == "rational" || s == "cyclotomic") return {s, 0};
    if (s.rfind("prime:", 0) == 0) {
        const std::string digits = s.substr(6);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInputError("bad prime field spec '" + s + "'");
        return {"prime", std::stoull(digits)};
    }
    throw InvalidInputError("unknown field '" + s + "' (expected rational | cyclotomic | prime:P)");
}

template <class Fn>
auto dispatch_field(const FieldChoice& fc, Fn&& fn) {
    if (fc.kind == "rational") {
        RationalField f;
        return fn(f);
    }
    if (fc.kind == "cyclotomic") {
        CyclotomicField f;
        return fn(f);
    }
    PrimeField f(fc.p);
    return fn(f);
}

template <class F>
json triple_json(const F& f, const std::array<typename F::Elt, 3>& x) {
    return json::array({f.to_string(x[0]), f.to_string(x[1]), f.to_string(x[2])});
}

template <class F>
json tensor_json(const Tensor333<F>& t) {
    json out = json::array();
    for (const auto& e : t.a) out.push_back(t.field.to_string(e));
    return out;
}

template <class F>
json basis_rows_json(const F& f, const Subspace<F>& s) {
    json rows = json::array();
    for (int r = 0; r < s.basis.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < s.basis.cols; ++c) row.push_back(f.to_string(s.basis.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

const std::vector<std::string>& curve_names() {
    static const std::vector<std::string> names{"x", "y", "z"};
    return names;
}

const std::vector<std::string>& graph_names() {
    static const std::vector<std::string> names{"x0", "y0", "z0", "x1", "y1", "z1"};
    return names;
}

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out.good()) throw InvalidInputError("cannot open output path '" + out_path + "'");
    out << text;
}

/// Runs one item per input string, concurrently when more than one input is
/// given. A single input propagates its exception; in a batch each failing
/// item becomes an error object and the exit code is the worst item code.
template <class Item>
std::pair<json, int> run_items(const std::vector<std::string>& inputs, const Item& item) {
    if (inputs.size() == 1) return {item(inputs.front()), 0};
    std::vector<std::future<json>> futures;
    futures.reserve(inputs.size());
    for (const auto& input : inputs)
        futures.push_back(std::async(std::launch::async, [&item, input] { return item(input); }));
    json arr = json::array();
    int code = 0;
    for (auto& fut : futures) {
        try {
            arr.push_back(fut.get());
        } catch (const std::exception& e) {
            const int c = exit_code_of(e);
            code = std::max(code, c);
            arr.push_back(json{{"error", e.what()}, {"exit_code", c}});
        }
    }
    json wrap;
    wrap["schema"] = kSchema;
    wrap["items"] = std::move(arr);
    return {wrap, code};
}

// ---------------------------------------------------------------- hilbert

template <class F>
json run_hilbert(const F& f, const std::string& abc_csv, int degree) {
    const auto abc = parse_triple(f, abc_csv);
    const auto alg = sklyanin(f, abc[0], abc[1], abc[2]);
    const auto dims = hilbert_dims(alg, degree);
    const auto sums = euler_alternating_sums(dims);
    const auto verdicts = as_regular_euler_check(dims);

    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["abc"] = triple_json(f, abc);
    j["degree"] = degree;
    j["dims"] = dims;
    j["euler_sums"] = sums;
    j["euler_ok"] = verdicts;
    j["euler_first_failure"] = nullptr;
    for (size_t d = 0; d < verdicts.size(); ++d)
        if (!verdicts[d]) {
            j["euler_first_failure"] = d;
            break;
        }
    j["in_delta"] = in_delta(f, abc[0], abc[1], abc[2]);
    j["flags"] = alg.flags;
    return j;
}

// --------------------------------------------------------------- pipeline

template <class F>
json run_pipeline(const F& f, const std::string& uvw_csv) {
    const auto raw = parse_triple(f, uvw_csv);
    const auto uvw = canonical_proj(f, raw);
    const HParamPoint<F> param(f, uvw);

    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["uvw"] = triple_json(f, uvw);

    std::vector<std::string> flags = sklyanin(f, uvw[0], uvw[1], uvw[2]).flags;

    const auto t = normal_form(f, uvw[0], uvw[1], uvw[2]);
    j["tensor"] = tensor_json(t);
    const auto det = det_cubic(t, 0);
    j["det_cubic"] = poly_to_string(det, curve_names());
    const bool det_degenerate = det.is_zero();
    j["det_degenerate"] = det_degenerate;
    if (det_degenerate) flags.push_back("veronese-orbit");
    j["stability"] = stability_label(classify_stability(t));

    try {
        const auto member = member_through(param);
        j["pencil_member"] = {{"t0", f.to_string(member.t0)}, {"t1", f.to_string(member.t1)}};
        j["smooth_member"] = is_smooth_member(member);
    } catch (const InvalidInputError&) {
        j["pencil_member"] = nullptr;
        j["smooth_member"] = nullptr;
        flags.push_back("base-point-parameter");
    }

    const auto rel = relation_subspace(t);
    j["relation_basis"] = basis_rows_json(f, rel);
    json pl = json::array();
    for (const auto& coord : plucker(rel)) pl.push_back(f.to_string(coord));
    j["relation_plucker"] = std::move(pl);

    j["roundtrip"] = nullptr;
    try {
        const auto triple = triple_of_tensor(t);
        if (triple.marker_p) {
            bool match = true;
            for (int i = 0; i < 3; ++i)
                match = match && f.eq((*triple.marker_p)[static_cast<size_t>(i)],
                                      uvw[static_cast<size_t>(i)]);
            j["roundtrip"] = {{"recovered", triple_json(f, *triple.marker_p)}, {"match", match}};
        } else {
            flags.push_back("no-roundtrip: member is singular");
        }
    } catch (const InvalidInputError& e) {
        flags.push_back(std::string("no-roundtrip: ") + e.what());
    }

    try {
        const auto wp = invariant_coordinates(param);
        j["invariants"] = {{"c6", f.to_string(wp.c[0])},
                           {"c9", f.to_string(wp.c[1])},
                           {"c12", f.to_string(wp.c[2])},
                           {"canonical", wp.canonical},
                           {"nilpotent", wp.nilpotent}};
    } catch (const InvalidInputError& e) {
        j["invariants"] = nullptr;
        flags.push_back(std::string("no-invariants: ") + e.what());
    }

    j["flags"] = flags;
    return j;
}

// ----------------------------------------------------------------- quiver

struct QuiverArgs {
    std::string builtin;
    std::string spec_path;
    std::string sklyanin_csv;
    std::string relations_path;
};

Quiver quiver_from_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw InvalidInputError("cannot read quiver spec '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw InvalidInputError("quiver spec '" + path + "' is not valid JSON");
    if (!j.contains("vertices") || !j.contains("arrows"))
        throw InvalidInputError("quiver spec needs 'vertices' and 'arrows'");
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.push_back(Arrow{a.at("name").get<std::string>(), a.at("src").get<int>(),
                               a.at("dst").get<int>()});
    return Quiver(j.at("vertices").get<int>(), std::move(arrows));
}

template <class F>
std::vector<IdealComponent<F>> components_from_file(const F& f, const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw InvalidInputError("cannot read relation file '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw InvalidInputError("relation file '" + path + "' is not valid JSON");
    std::vector<IdealComponent<F>> out;
    for (const auto& c : j.at("components")) {
        IdealComponent<F> comp{c.at("target").get<int>(), c.at("source").get<int>(),
                               c.at("length").get<int>(), {}};
        for (const auto& row : c.at("rows")) {
            std::vector<typename F::Elt> r;
            for (const auto& entry : row) r.push_back(f.parse(entry.get<std::string>()));
            comp.rows.push_back(std::move(r));
        }
        out.push_back(std::move(comp));
    }
    return out;
}

json dims_json(const DimensionMatrix& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
}

template <class F>
json run_quiver(const F& f, const QuiverArgs& args) {
    if (args.builtin.empty() == args.spec_path.empty())
        throw InvalidInputError("pass exactly one of --builtin and --spec");
    if (!args.sklyanin_csv.empty() && args.builtin != "beilinson")
        throw InvalidInputError("--sklyanin applies only to the beilinson builtin");
    if (!args.sklyanin_csv.empty() && !args.relations_path.empty())
        throw InvalidInputError("--sklyanin and --relations are mutually exclusive");

    std::optional<Quiver> quiver;
    int fd_d = 0;
    if (!args.builtin.empty()) {
        if (args.builtin == "beilinson") {
            quiver = beilinson_quiver();
        } else if (args.builtin.rfind("fd:", 0) == 0) {
            fd_d = std::atoi(args.builtin.c_str() + 3);
            quiver = fd_quiver(fd_d);
        } else {
            throw InvalidInputError("unknown builtin '" + args.builtin +
                                    "' (expected beilinson or fd:D)");
        }
    } else {
        quiver = quiver_from_spec_file(args.spec_path);
    }
    const Quiver& q = *quiver;

    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["builtin"] = args.builtin.empty() ? json(nullptr) : json(args.builtin);
    json arrows = json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"name", a.name}, {"src", a.src}, {"dst", a.dst}});
    j["quiver"] = {{"vertices", q.num_vertices()}, {"arrows", std::move(arrows)}};
    j["longest_path"] = q.longest_path();
    j["index_convention"] = "dims[target][source]";
    const auto free = free_dims(q);
    j["free_dims"] = dims_json(free);
    j["free_total"] = total_dimension(free);

    // Assemble the relation ideal: explicit file, Sklyanin relations on the
    // Beilinson quiver, or the builtin F_d relation block.
    std::vector<IdealComponent<F>> gens;
    if (!args.relations_path.empty()) {
        gens = components_from_file(f, args.relations_path);
    } else if (!args.sklyanin_csv.empty()) {
        const auto abc = parse_triple(f, args.sklyanin_csv);
        const auto alg = sklyanin(f, abc[0], abc[1], abc[2]);
        IdealComponent<F> comp{2, 0, 2, {}};
        for (int r = 0; r < alg.relations.basis.rows; ++r) {
            std::vector<typename F::Elt> row;
            for (int c = 0; c < 9; ++c) row.push_back(alg.relations.basis.at(r, c));
            comp.rows.push_back(std::move(row));
        }
        gens.push_back(std::move(comp));
    } else if (fd_d != 0) {
        gens = fd_ideal_components(f, fd_d);
    }
    if (gens.empty()) return j;

    const auto ideal = ideal_closure(f, q, gens);
    const auto idims = ideal_dims(q, ideal);
    const auto qdims = quotient_dims(q, ideal);
    j["ideal_dims"] = dims_json(idims);
    j["ideal_total"] = total_dimension(idims);
    j["quotient_dims"] = dims_json(qdims);
    j["quotient_total"] = total_dimension(qdims);
    json comps = json::array();
    for (const auto& kv : ideal.components)
        comps.push_back({{"target", kv.first[0]},
                         {"source", kv.first[1]},
                         {"length", kv.first[2]},
                         {"dim", kv.second.dim()}});
    j["ideal_components"] = std::move(comps);

    std::vector<std::string> arrow_names;
    for (const auto& a : q.arrows()) arrow_names.push_back(a.name);
    const auto forms = phi_monomial(f, q, ideal);
    json forms_json = json::array();
    for (const auto& p : forms) forms_json.push_back(poly_to_string(p, arrow_names));
    j["moduli_forms"] = std::move(forms_json);

    const auto back = ideal_from_moduli(f, q, forms);
    j["roundtrip"] = (back.components == ideal.components);

    if (fd_d != 0) {
        static const std::array<std::array<int, 2>, 3> pairs{{{2, 0}, {3, 1}, {3, 0}}};
        json ranks = json::array();
        for (const auto& ts : pairs)
            ranks.push_back({{"target", ts[0]},
                             {"source", ts[1]},
                             {"rank", composition_image_rank(q, ideal, ts[0], ts[1])}});
        j["composition_ranks"] = std::move(ranks);
    }
    return j;
}

// ------------------------------------------------------------------ curve

template <class F>
json run_curve_member(const F& f, const std::string& uvw_csv, bool with_points) {
    const HParamPoint<F> param(f, parse_triple(f, uvw_csv));
    const auto member = member_through(param);
    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["uvw"] = triple_json(f, param.x);
    j["t0"] = f.to_string(member.t0);
    j["t1"] = f.to_string(member.t1);
    j["cubic"] = poly_to_string(member.cubic, curve_names());
    j["smooth"] = is_smooth_member(member);
    if (with_points) {
        if constexpr (std::is_same_v<F, PrimeField>) {
            const auto pts = enumerate_points(member);
            json arr = json::array();
            for (const auto& p : pts) arr.push_back(triple_json(f, p));
            j["point_count"] = pts.size();
            j["points"] = std::move(arr);
        } else {
            throw InvalidInputError("point enumeration requires a prime field");
        }
    }
    return j;
}

template <class F>
json run_curve_add(const F& f, const std::string& uvw_csv, const std::string& p_csv,
                   const std::string& q_csv) {
    const HParamPoint<F> param(f, parse_triple(f, uvw_csv));
    const auto member = member_through(param);
    const CurvePoint<F> p(member, parse_triple(f, p_csv));
    const CurvePoint<F> q(member, parse_triple(f, q_csv));
    const auto sum = add(p, q);
    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["t0"] = f.to_string(member.t0);
    j["t1"] = f.to_string(member.t1);
    j["p"] = triple_json(f, p.x);
    j["q"] = triple_json(f, q.x);
    j["sum"] = triple_json(f, sum.x);
    return j;
}

template <class F>
json run_curve_torsion(const F& f, const std::string& uvw_csv, const std::string& point_csv,
                       long cap) {
    const HParamPoint<F> param(f, parse_triple(f, uvw_csv));
    const auto member = member_through(param);
    const CurvePoint<F> p(member, parse_triple(f, point_csv));
    const auto order = torsion_order(p, cap);
    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["point"] = triple_json(f, p.x);
    j["cap"] = cap;
    j["order"] = order ? json(*order) : json(nullptr);
    return j;
}

json run_curve_graph_check(const PrimeField& f, const std::string& uvw_csv) {
    const HParamPoint<PrimeField> param(f, parse_triple(f, uvw_csv));
    const auto member = member_through(param);
    if (!is_smooth_member(member))
        throw InvalidInputError("graph check requires a smooth member");
    const CurvePoint<PrimeField> translation(member, param.x);
    const auto pts = enumerate_points(member);
    bool consistent = true;
    for (const auto& x : pts) {
        const auto solved = graph_solve(param, x);
        const auto expected = translate(CurvePoint<PrimeField>(member, x), translation);
        for (int i = 0; i < 3; ++i)
            consistent = consistent && f.eq(solved[static_cast<size_t>(i)],
                                            expected.x[static_cast<size_t>(i)]);
    }
    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["uvw"] = triple_json(f, param.x);
    j["point_count"] = pts.size();
    j["graph_matches_translation"] = consistent;
    return j;
}

// ----------------------------------------------------------------- tensor

template <class F>
Tensor333<F> tensor_from_args(const F& f, const std::string& uvw_csv,
                              const std::string& entries_csv) {
    if (uvw_csv.empty() == entries_csv.empty())
        throw InvalidInputError("pass exactly one of --uvw and --entries");
    if (!uvw_csv.empty()) {
        const auto uvw = parse_triple(f, uvw_csv);
        return normal_form(f, uvw[0], uvw[1], uvw[2]);
    }
    const auto parts = split_csv(entries_csv);
    if (parts.size() != 27)
        throw InvalidInputError("--entries needs 27 comma-separated values (index 9i+3j+k)");
    Tensor333<F> t(f);
    for (int i = 0; i < 27; ++i) t.a[static_cast<size_t>(i)] = f.parse(parts[static_cast<size_t>(i)]);
    return t;
}

template <class F>
json run_tensor_from_param(const F& f, const std::string& uvw_csv) {
    const auto uvw = parse_triple(f, uvw_csv);
    const auto t = normal_form(f, uvw[0], uvw[1], uvw[2]);
    const auto det = det_cubic(t, 0);
    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["uvw"] = triple_json(f, uvw);
    j["tensor"] = tensor_json(t);
    j["det_cubic"] = poly_to_string(det, curve_names());
    j["det_degenerate"] = det.is_zero();
    return j;
}

template <class F>
json run_tensor_classify(const F& f, const std::string& uvw_csv,
                         const std::string& entries_csv) {
    const auto t = tensor_from_args(f, uvw_csv, entries_csv);
    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["stability"] = stability_label(classify_stability(t));
    j["geometric"] = is_geometric(t);
    return j;
}

template <class F>
json run_tensor_triple(const F& f, const std::string& uvw_csv, const std::string& entries_csv) {
    const auto t = tensor_from_args(f, uvw_csv, entries_csv);
    const auto triple = triple_of_tensor(t);
    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["curve_cubic"] = poly_to_string(triple.curve_cubic, curve_names());
    j["curve_smooth"] = triple.curve_smooth;
    json forms = json::array();
    for (const auto& p : triple.forms) forms.push_back(poly_to_string(p, graph_names()));
    j["graph_forms"] = std::move(forms);
    j["marker_l0"] = triple.marker_l0;
    j["marker_l1"] = triple.marker_l1;
    j["translation_q"] =
        triple.translation_q ? triple_json(f, *triple.translation_q) : json(nullptr);
    j["marker_p"] = triple.marker_p ? triple_json(f, *triple.marker_p) : json(nullptr);
    return j;
}

template <class F>
json run_tensor_relation(const F& f, const std::string& uvw_csv, const std::string& entries_csv,
                         bool with_plucker) {
    const auto t = tensor_from_args(f, uvw_csv, entries_csv);
    const auto rel = relation_subspace(t);
    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["basis"] = basis_rows_json(f, rel);
    j["dim"] = rel.dim();
    if (with_plucker) {
        json pl = json::array();
        for (const auto& coord : plucker(rel)) pl.push_back(f.to_string(coord));
        j["plucker"] = std::move(pl);
    }
    return j;
}

// ------------------------------------------------------------- invariants

template <class F>
json run_invariants_eval(const F& f, const std::string& uvw_csv) {
    const HParamPoint<F> param(f, parse_triple(f, uvw_csv));
    const auto wp = invariant_coordinates(param);
    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["uvw"] = triple_json(f, param.x);
    j["weights"] = {6, 9, 12};
    j["c6"] = f.to_string(wp.c[0]);
    j["c9"] = f.to_string(wp.c[1]);
    j["c12"] = f.to_string(wp.c[2]);
    j["canonical"] = wp.canonical;
    j["nilpotent"] = wp.nilpotent;
    return j;
}

json run_invariants_orbit(const FieldChoice& fc, const std::string& uvw_csv, int samples,
                          std::uint64_t seed) {
    if (fc.kind == "prime")
        throw InvalidInputError("orbit sampling acts through the cyclotomic group closure; "
                                "use --field rational or cyclotomic");
    CyclotomicField f;
    const HParamPoint<CyclotomicField> param(f, parse_triple(f, uvw_csv));
    const auto& cs = hessian_invariants();
    const std::vector<Cyc> at{param.x[0], param.x[1], param.x[2]};
    const std::array<Cyc, 3> reference{cs[0].eval(at), cs[1].eval(at), cs[2].eval(at)};

    const auto& G = hessian_group();
    Lcg rng(seed);
    bool constant = true;
    for (int s = 0; s < samples; ++s) {
        const auto& g = G.elements[static_cast<size_t>(rng.range(0, G.order() - 1))];
        const auto moved = mat_vec(g, at);
        for (int k = 0; k < 3; ++k)
            constant = constant && f.eq(cs[static_cast<size_t>(k)].eval(moved),
                                        reference[static_cast<size_t>(k)]);
    }

    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["uvw"] = triple_json(f, param.x);
    j["seed"] = seed;
    j["samples"] = samples;
    j["constant"] = constant;
    j["c6"] = f.to_string(reference[0]);
    j["c9"] = f.to_string(reference[1]);
    j["c12"] = f.to_string(reference[2]);
    return j;
}

// ------------------------------------------------------------------ group

json run_group_verify() {
    const auto& G = hessian_group();
    const CyclotomicField& f = G.field;
    json j;
    j["schema"] = kSchema;
    j["field"] = field_label(f);
    j["order"] = G.order();
    j["scalar_count"] = G.scalar_count;
    j["projective_order"] = G.projective_order();
    j["preserves_pencil"] = preserves_pencil(G);
    json gens = json::array();
    for (const auto& g : G.generators) {
        json rows = json::array();
        for (int i = 0; i < 3; ++i) {
            json row = json::array();
            for (int k = 0; k < 3; ++k) row.push_back(f.to_string(g.at(i, k)));
            rows.push_back(row);
        }
        gens.push_back(rows);
    }
    j["generators"] = std::move(gens);
    return j;
}

// ------------------------------------------------------------- gk-profile

json laurent_json(const LaurentData& q) {
    json out = json::array();
    for (const auto& [e, c] : q.c) out.push_back(json::array({e, c.get_str()}));
    return out;
}

json run_gk_profile(const std::string& terms) {
    LaurentData q;
    for (const auto& part : split_csv(terms)) {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw InvalidInputError("term '" + part + "' is not of the form exponent:coefficient");
        try {
            q.add_term(std::stoi(part.substr(0, colon)), Int(part.substr(colon + 1)));
        } catch (const std::exception&) {
            throw InvalidInputError("bad Laurent term '" + part + "'");
        }
    }
    const auto g = gk_profile(q);

    // Re-expand the profile to certify r + a(1-t) + b(1-t)^2 + f(1-t)^3 = q.
    const auto s = one_minus_t();
    const LaurentData rebuilt =
        laurent_const(g.r) + s * laurent_const(g.a) + s * s * laurent_const(g.b) + s * s * s * g.f;

    json j;
    j["schema"] = kSchema;
    j["q"] = laurent_json(q);
    j["r"] = g.r.get_str();
    j["a"] = g.a.get_str();
    j["b"] = g.b.get_str();
    j["f"] = laurent_json(g.f);
    j["f_at_1"] = g.f_at_1.get_str();
    j["gkdim"] = g.gkdim;
    j["reconstruction_ok"] = (rebuilt == q);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pipeline linking quadratic algebras, 3x3x3 tensors, Hesse cubics, "
                 "quiver ideals, and Hessian invariants"};
    app.require_subcommand(1);

    std::string field_spec = "rational";
    std::string out_path;
    std::uint64_t seed = 0;
    app.add_option("--field", field_spec, "coefficient field: rational | cyclotomic | prime:P")
        ->capture_default_str();
    app.add_option("--out", out_path, "write the JSON report to this file instead of stdout");
    app.add_option("--seed", seed, "seed for seeded sampling")->capture_default_str();

    auto* hilbert_cmd =
        app.add_subcommand("hilbert", "graded dimensions and Euler verdicts of S(a,b,c)");
    hilbert_cmd->fallthrough();
    std::vector<std::string> hilbert_abc;
    int hilbert_degree = 6;
    hilbert_cmd->add_option("--abc", hilbert_abc, "parameters a,b,c (repeat for a batch)")
        ->required();
    hilbert_cmd->add_option("--degree", hilbert_degree, "largest degree to compute")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    auto* pipeline_cmd = app.add_subcommand(
        "pipeline", "full tensor/curve/stability/invariant report for a parameter");
    pipeline_cmd->fallthrough();
    std::vector<std::string> pipeline_uvw;
    pipeline_cmd->add_option("--uvw", pipeline_uvw, "parameter u,v,w (repeat for a batch)")
        ->required();

    auto* quiver_cmd =
        app.add_subcommand("quiver", "path spaces, relation ideals, and the moduli roundtrip");
    quiver_cmd->fallthrough();
    QuiverArgs quiver_args;
    quiver_cmd->add_option("--builtin", quiver_args.builtin, "builtin quiver: beilinson | fd:D");
    quiver_cmd->add_option("--spec", quiver_args.spec_path, "JSON quiver description file");
    quiver_cmd->add_option("--sklyanin", quiver_args.sklyanin_csv,
                           "impose the S(a,b,c) relations (beilinson builtin only)");
    quiver_cmd->add_option("--relations", quiver_args.relations_path,
                           "JSON relation component file");

    auto* curve_cmd = app.add_subcommand("curve", "Hesse pencil members and their group law");
    curve_cmd->fallthrough();
    curve_cmd->require_subcommand(1);
    std::string curve_uvw, curve_p, curve_q, curve_point;
    long torsion_cap = 200;
    bool member_points = false;
    auto* member_cmd = curve_cmd->add_subcommand("member", "the member through a parameter");
    member_cmd->fallthrough();
    member_cmd->add_option("--uvw", curve_uvw, "parameter u,v,w")->required();
    member_cmd->add_flag("--points", member_points, "enumerate points (prime fields)");
    auto* add_cmd = curve_cmd->add_subcommand("add", "group law sum of two points");
    add_cmd->fallthrough();
    add_cmd->add_option("--uvw", curve_uvw, "parameter u,v,w")->required();
    add_cmd->add_option("--p", curve_p, "first point x,y,z")->required();
    add_cmd->add_option("--q", curve_q, "second point x,y,z")->required();
    auto* torsion_cmd = curve_cmd->add_subcommand("torsion", "order of a point");
    torsion_cmd->fallthrough();
    torsion_cmd->add_option("--uvw", curve_uvw, "parameter u,v,w")->required();
    torsion_cmd->add_option("--point", curve_point, "point x,y,z")->required();
    torsion_cmd->add_option("--cap", torsion_cap, "largest multiple tested")
        ->capture_default_str();
    auto* graph_cmd = curve_cmd->add_subcommand(
        "graph-check", "verify the graph forms cut the translation graph (prime fields)");
    graph_cmd->fallthrough();
    graph_cmd->add_option("--uvw", curve_uvw, "parameter u,v,w")->required();

    auto* tensor_cmd = app.add_subcommand("tensor", "normal forms, stability, triples");
    tensor_cmd->fallthrough();
    tensor_cmd->require_subcommand(1);
    std::string tensor_uvw, tensor_entries;
    bool tensor_plucker = false;
    auto* from_param_cmd =
        tensor_cmd->add_subcommand("from-param", "the normal form N_uvw and its cubic");
    from_param_cmd->fallthrough();
    from_param_cmd->add_option("--uvw", tensor_uvw, "parameter u,v,w")->required();
    auto* classify_cmd = tensor_cmd->add_subcommand("classify", "stability label");
    classify_cmd->fallthrough();
    classify_cmd->add_option("--uvw", tensor_uvw, "parameter u,v,w");
    classify_cmd->add_option("--entries", tensor_entries, "27 entries, index 9i+3j+k");
    auto* triple_cmd = tensor_cmd->add_subcommand("triple", "curve, graph forms, markers");
    triple_cmd->fallthrough();
    triple_cmd->add_option("--uvw", tensor_uvw, "parameter u,v,w");
    triple_cmd->add_option("--entries", tensor_entries, "27 entries, index 9i+3j+k");
    auto* relation_cmd = tensor_cmd->add_subcommand("relation", "the relation 3-subspace");
    relation_cmd->fallthrough();
    relation_cmd->add_option("--uvw", tensor_uvw, "parameter u,v,w");
    relation_cmd->add_option("--entries", tensor_entries, "27 entries, index 9i+3j+k");
    relation_cmd->add_flag("--plucker", tensor_plucker, "include the 84 Pluecker coordinates");

    auto* invariants_cmd =
        app.add_subcommand("invariants", "weighted invariant coordinates on parameters");
    invariants_cmd->fallthrough();
    invariants_cmd->require_subcommand(1);
    std::string inv_uvw;
    int orbit_samples = 25;
    auto* eval_cmd = invariants_cmd->add_subcommand("eval", "evaluate (c6, c9, c12)");
    eval_cmd->fallthrough();
    eval_cmd->add_option("--uvw", inv_uvw, "parameter u,v,w")->required();
    auto* orbit_cmd =
        invariants_cmd->add_subcommand("orbit", "check constancy on seeded orbit samples");
    orbit_cmd->fallthrough();
    orbit_cmd->add_option("--uvw", inv_uvw, "parameter u,v,w")->required();
    orbit_cmd->add_option("--samples", orbit_samples, "number of seeded group elements")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto* group_cmd = app.add_subcommand("group", "the pencil symmetry group");
    group_cmd->fallthrough();
    group_cmd->require_subcommand(1);
    auto* verify_cmd =
        group_cmd->add_subcommand("verify", "closure order, scalars, pencil preservation");
    verify_cmd->fallthrough();

    auto* gk_cmd = app.add_subcommand("gk-profile", "expansion of q(t) around t = 1");
    gk_cmd->fallthrough();
    std::string gk_terms;
    gk_cmd->add_option("--terms", gk_terms,
                       "Laurent polynomial as exponent:coefficient pairs, e.g. 0:1,1:-1")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const FieldChoice fc = parse_field_spec(field_spec);
        json result;
        int code = 0;

        if (hilbert_cmd->parsed()) {
            std::tie(result, code) = dispatch_field(fc, [&](const auto& f) {
                return run_items(hilbert_abc,
                                 [&](const std::string& abc) { return run_hilbert(f, abc, hilbert_degree); });
            });
        } else if (pipeline_cmd->parsed()) {
            std::tie(result, code) = dispatch_field(fc, [&](const auto& f) {
                return run_items(pipeline_uvw,
                                 [&](const std::string& uvw) { return run_pipeline(f, uvw); });
            });
        } else if (quiver_cmd->parsed()) {
            result = dispatch_field(fc, [&](const auto& f) { return run_quiver(f, quiver_args); });
        } else if (member_cmd->parsed()) {
            result = dispatch_field(
                fc, [&](const auto& f) { return run_curve_member(f, curve_uvw, member_points); });
        } else if (add_cmd->parsed()) {
            result = dispatch_field(
                fc, [&](const auto& f) { return run_curve_add(f, curve_uvw, curve_p, curve_q); });
        } else if (torsion_cmd->parsed()) {
            result = dispatch_field(fc, [&](const auto& f) {
                return run_curve_torsion(f, curve_uvw, curve_point, torsion_cap);
            });
        } else if (graph_cmd->parsed()) {
            if (fc.kind != "prime")
                throw InvalidInputError("graph-check scans every point; use --field prime:P");
            result = run_curve_graph_check(PrimeField(fc.p), curve_uvw);
        } else if (from_param_cmd->parsed()) {
            result = dispatch_field(
                fc, [&](const auto& f) { return run_tensor_from_param(f, tensor_uvw); });
        } else if (classify_cmd->parsed()) {
            result = dispatch_field(fc, [&](const auto& f) {
                return run_tensor_classify(f, tensor_uvw, tensor_entries);
            });
        } else if (triple_cmd->parsed()) {
            result = dispatch_field(fc, [&](const auto& f) {
                return run_tensor_triple(f, tensor_uvw, tensor_entries);
            });
        } else if (relation_cmd->parsed()) {
            result = dispatch_field(fc, [&](const auto& f) {
                return run_tensor_relation(f, tensor_uvw, tensor_entries, tensor_plucker);
            });
        } else if (eval_cmd->parsed()) {
            result = dispatch_field(
                fc, [&](const auto& f) { return run_invariants_eval(f, inv_uvw); });
        } else if (orbit_cmd->parsed()) {
            result = run_invariants_orbit(fc, inv_uvw, orbit_samples, seed);
        } else if (verify_cmd->parsed()) {
            result = run_group_verify();
        } else if (gk_cmd->parsed()) {
            result = run_gk_profile(gk_terms);
        } else {
            throw InvalidInputError("no subcommand selected");
        }

        emit(result, out_path);
        return code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "ncp2cli: %s\n", e.what());
        return exit_code_of(e);
    }
}
