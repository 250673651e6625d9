#include "schurdex/cli.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "schurdex/arith.hpp"
#include "schurdex/decomp.hpp"
#include "schurdex/dyadic.hpp"
#include "schurdex/groups.hpp"
#include "schurdex/ratquat.hpp"

namespace schurdex::cli {

using nlohmann::json;
using arith::i64;

namespace {

json table_json(const LocalIndexTable& t) {
    json out = json::array();
    for (const auto& [p, m] : t.entries()) out.push_back(json::array({p.name(), m}));
    return out;
}

json places_json(const std::vector<Place>& places) {
    json out = json::array();
    for (Place p : places) out.push_back(p.name());
    return out;
}

std::string center_of(const AlgebraPresentation& A) {
    return std::visit(
        [](const auto& a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, QuaternionAlgebraQ>) return "Q";
            else if constexpr (std::is_same_v<T, CyclicAlgebra>) return a.K.to_string();
            else return a.F.to_string();
        },
        A);
}

std::vector<std::string> words(std::string text) {
    std::replace_if(text.begin(), text.end(), [](char ch) { return ch == ',' || ch == '(' || ch == ')'; }, ' ');
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

i64 integer(const std::string& w, std::size_t position) {
    i64 v = 0;
    const auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || end != w.data() + w.size()) throw ParseError(position, "an integer, got '" + w + "'");
    return v;
}

void fill_index_record(json& rec, const RouteResult& r) {
    rec["local_indices"] = table_json(r.table);
    rec["schur_index"] = r.table.schur_index();
    rec["route"] = route_name(r.route);
    rec["warnings"] = r.warnings;
    if (!r.undetermined.empty()) rec["undetermined"] = places_json(r.undetermined);
}

int attach_check(json& rec, const AlgebraPresentation& A) {
    const auto check = check_routes(A);
    json routes = json::object(), failed = json::object();
    for (const auto& r : check.results) routes[std::string(route_name(r.route))] = table_json(r.table);
    for (const auto& [r, why] : check.failures) failed[std::string(route_name(r))] = why;
    rec["check"] = {{"agree", check.agree()}, {"routes", routes}, {"failed", failed}, {"conflicts", check.conflicts}};
    return check.agree() ? kOk : kDisagreement;
}

Outcome cmd_index(const std::string& operand, const Options& opts) {
    const auto A = parse_algebra(operand);
    Outcome out;
    out.record["input"] = operand;
    out.record["center"] = center_of(A);
    fill_index_record(out.record, opts.route ? run_route(A, *opts.route) : compute_local_indices(A));
    if (opts.check) out.exit_code = attach_check(out.record, A);
    return out;
}

Outcome cmd_quat(const std::string& operand, const Options& opts) {
    const auto w = words(operand);
    if (w.size() != 2) throw ParseError(0, "two integers a b");
    const AlgebraPresentation A = QuaternionAlgebraQ::normalized(integer(w[0], 0), integer(w[1], 0));
    Outcome out;
    out.record["input"] = operand;
    out.record["center"] = "Q";
    out.record["algebra"] = std::get<QuaternionAlgebraQ>(A).to_string();
    fill_index_record(out.record, run_route(A, opts.route.value_or(Route::Quaternion)));
    if (opts.check) out.exit_code = attach_check(out.record, A);
    return out;
}

json factor_json(const CyclicAlgebra& f, std::vector<std::string>& warnings) {
    json out{{"K", f.K.to_string()},
             {"L", f.L.to_string()},
             {"sigma", f.sigma.exponent()},
             {"a", f.a.to_string()},
             {"algebra", f.to_string()}};
    if (f.K.is_rational() && f.L.degree() == 2 && f.a.is_rational())
        out["quaternion"] = quadratic_to_quaternion(f).to_string();
    try {
        auto report = local_indices_of_factor(f);
        out["local_indices"] = table_json(report.table);
        warnings.insert(warnings.end(), report.warnings.begin(), report.warnings.end());
    } catch (const Error& e) {
        warnings.push_back(f.to_string() + ": " + e.what());
    }
    return out;
}

Outcome cmd_decompose(const std::string& operand, const Options&) {
    const auto A = parse_algebra(operand);
    const auto* C = std::get_if<CyclotomicAlgebra>(&A);
    if (!C) throw Error(ErrorKind::WrongGeneratorCount, "expected 2 generators, got a " + std::string(shape_name(A)));
    const auto pair = decompose(*C);
    std::vector<std::string> warnings;
    Outcome out;
    out.record = {{"input", operand},
                  {"center", C->F.to_string()},
                  {"matrix_size", pair.matrix_size},
                  {"method", pair.method},
                  {"swapped", pair.swapped},
                  {"u_scalar", pair.u_scalar.to_string()},
                  {"v_scalar", pair.v_scalar.to_string()}};
    out.record["first"] = factor_json(pair.first, warnings);
    out.record["second"] = factor_json(pair.second, warnings);
    out.record["warnings"] = warnings;
    return out;
}

Outcome cmd_efg(const std::string& operand, const Options&) {
    const auto w = words(operand);
    if (w.size() != 3) throw ParseError(0, "n F p");
    const i64 n = integer(w[0], 0), p = integer(w[2], 0);
    if (n < 1) throw ParseError(0, "a positive n");
    if (!arith::is_prime(p)) throw ParseError(0, "a prime p");
    const auto F = parse_field(w[1]);
    const auto r = efg_over(F, n, p);
    Outcome out;
    out.record = {{"input", operand}, {"n", n}, {"field", F.to_string()}, {"p", p},
                  {"e", r.e},         {"f", r.f}, {"g", r.g}};
    return out;
}

std::string_view kind_name(DyadicVerdict::Kind k) {
    switch (k) {
        case DyadicVerdict::Kind::Q8: return "Q8";
        case DyadicVerdict::Kind::TypeQ8q: return "TypeQ8q";
        case DyadicVerdict::Kind::TypeQDq: return "TypeQDq";
        case DyadicVerdict::Kind::NotDyadicSchur: break;
    }
    return "NotDyadicSchur";
}

Outcome cmd_group(const std::string& operand, const Options&) {
    const auto A = normalize(parse_algebra(operand));
    PresentedGroup G = [&] {
        if (const auto* c = std::get_if<CyclicCyclotomicAlgebra>(&A)) return defining_group(*c);
        if (const auto* c = std::get_if<CyclotomicAlgebra>(&A)) return defining_group(*c);
        throw Error(ErrorKind::RouteNotApplicable, "a " + std::string(shape_name(A)) + " has no defining group");
    }();
    const auto chi = induced_faithful_character(G);
    const auto verdict = is_dyadic_schur_group(G);
    json v{{"kind", kind_name(verdict.kind)}, {"label", verdict.to_string()}};
    if (verdict.q) v["q"] = *verdict.q;
    Outcome out;
    out.record = {{"input", operand},
                  {"order", G.order()},
                  {"n", G.n()},
                  {"generators", G.rank()},
                  {"character_degree", chi.degree().to_string()},
                  {"character_field", character_field(chi).to_string()},
                  {"frobenius_schur", frobenius_schur(chi, G)},
                  {"center_order", center(G, whole_group(G)).order()},
                  {"verdict", v}};
    return out;
}

Outcome guarded(Command c, const std::string& operand, const Options& opts) {
    try {
        switch (c) {
            case Command::Index: return cmd_index(operand, opts);
            case Command::Decompose: return cmd_decompose(operand, opts);
            case Command::Quat: return cmd_quat(operand, opts);
            case Command::Efg: return cmd_efg(operand, opts);
            case Command::Group: return cmd_group(operand, opts);
        }
    } catch (const Error& e) {
        Outcome out;
        out.record = {{"input", operand}, {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
        out.exit_code = exit_code_for(e.kind());
        return out;
    } catch (const std::exception& e) {
        Outcome out;
        out.record = {{"input", operand}, {"error", {{"kind", "Internal"}, {"message", e.what()}}}};
        out.exit_code = kInternal;
        return out;
    }
    return {};
}

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + cell(v[i]);
        return s + "]";
    }
    return v.dump();
}

}  // namespace

Command parse_command(std::string_view name) {
    for (Command c : {Command::Index, Command::Decompose, Command::Quat, Command::Efg, Command::Group})
        if (command_name(c) == name) return c;
    throw std::invalid_argument("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command c) {
    switch (c) {
        case Command::Index: return "index";
        case Command::Decompose: return "decompose";
        case Command::Quat: return "quat";
        case Command::Efg: return "efg";
        case Command::Group: return "group";
    }
    return "unknown";
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError:
        case ErrorKind::InvalidPresentation:
        case ErrorKind::ZeroEntry: return kParse;
        default: return kUnsupported;
    }
}

Outcome run(Command c, const std::string& operand, const Options& opts) { return guarded(c, operand, opts); }

std::vector<Outcome> run_batch(Command c, const std::vector<std::string>& operands, const Options& opts) {
    std::vector<Outcome> out(operands.size());
    const auto count = static_cast<std::int64_t>(operands.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) out[i] = guarded(c, operands[i], opts);
    return out;
}

int combined_exit_code(const std::vector<Outcome>& outcomes) {
    // Disagreement outranks unsupported, which outranks parse failures.
    auto rank = [](int code) {
        switch (code) {
            case kDisagreement: return 4;
            case kUnsupported: return 3;
            case kParse: return 2;
            case kInternal: return 1;
            default: return 0;
        }
    };
    int best = kOk;
    for (const auto& o : outcomes)
        if (rank(o.exit_code) > rank(best)) best = o.exit_code;
    return best;
}

std::vector<std::string> read_corpus(std::istream& in) {
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        line = line.substr(0, line.find('#'));
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

std::string render_json(const Outcome& o) { return o.record.dump(); }

std::string render_table(Command c, const std::vector<Outcome>& outcomes) {
    std::vector<std::pair<std::string, std::string>> columns;
    switch (c) {
        case Command::Index:
        case Command::Quat:
            columns = {{"input", "input"}, {"center", "center"}, {"local_indices", "local indices"},
                       {"schur_index", "index"}, {"route", "route"}};
            break;
        case Command::Decompose: columns = {{"input", "input"}, {"first", "first"}, {"second", "second"}, {"method", "method"}}; break;
        case Command::Efg: columns = {{"input", "input"}, {"e", "e"}, {"f", "f"}, {"g", "g"}}; break;
        case Command::Group:
            columns = {{"input", "input"}, {"order", "order"}, {"character_degree", "degree"},
                       {"frobenius_schur", "FS"}, {"verdict", "verdict"}};
            break;
    }
    std::vector<std::vector<std::string>> rows;
    rows.emplace_back();
    for (const auto& [key, title] : columns) rows.back().push_back(title);
    for (const auto& o : outcomes) {
        std::vector<std::string> row;
        const auto& r = o.record;
        if (r.contains("error")) {
            row = {cell(r["input"]), "error " + cell(r["error"]["message"])};
        } else {
            for (const auto& [key, title] : columns) {
                const json& v = r.contains(key) ? r[key] : json();
                if (key == "first" || key == "second") row.push_back(cell(v["algebra"]));
                else if (key == "verdict") row.push_back(cell(v["label"]));
                else row.push_back(v.is_null() ? "-" : cell(v));
            }
            if (r.contains("check")) row.push_back(r["check"]["agree"].get<bool>() ? "agree" : "DISAGREE");
        }
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size()) out += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

}  // namespace schurdex::cli
