#include "ffrunner/cli.hpp"

#include "ffrunner/json_out.hpp"
#include "ffrunner/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace ffr {

namespace {

std::uint64_t env_u64(const char* name, std::uint64_t def) {
    const char* v = std::getenv(name);
    return v ? std::strtoull(v, nullptr, 10) : def;
}

double env_double(const char* name, double def) {
    const char* v = std::getenv(name);
    return v ? std::strtod(v, nullptr) : def;
}

struct CommonOpts {
    std::uint64_t q = 0;
    unsigned p = 0;
    unsigned e = 1;
    std::string speeds;
    std::string speeds_file;
    std::string format = "json";
    int threads = 1;
    std::uint64_t bitmap_cap = env_u64("FFRUNNER_BITMAP_CAP_BITS", std::uint64_t(1) << 32);
    std::uint64_t max_nodes = env_u64("FFRUNNER_MAX_NODES", 200'000'000);
    double max_seconds = env_double("FFRUNNER_MAX_SECONDS", 600.0);
};

void add_field_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--q", o.q, "field size (prime power shorthand for --p/--e)");
    cmd->add_option("--p", o.p, "prime characteristic");
    cmd->add_option("--e", o.e, "extension degree (default 1)");
}

void add_output_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--threads", o.threads, "worker threads (default 1, reproducible)");
    cmd->add_option("--bitmap-cap-bits", o.bitmap_cap, "refusal threshold for coverage bit arrays");
    cmd->add_option("--max-nodes", o.max_nodes, "search node budget");
    cmd->add_option("--max-seconds", o.max_seconds, "search wall-clock budget");
}

void add_speed_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--speeds", o.speeds,
                    "comma-separated speeds: coefficient lists like [1,0,1] or terms like T^2+T+1");
    cmd->add_option("--speeds-file", o.speeds_file, "JSON file holding an array of coefficient lists");
}

Field resolve_field(const CommonOpts& o) {
    if (o.q != 0) return Field::from_q(o.q);
    if (o.p != 0) return Field(o.p, o.e);
    throw CLI::ValidationError("field", "specify --q or --p (with optional --e)");
}

Poly parse_poly_human(const Field& field, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    if (s == "0") return Poly::zero(field);
    std::vector<Elem> acc;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    while (i < s.size()) {
        std::uint64_t coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = 0;
            saw_coeff = true;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                coeff = coeff * 10 + static_cast<std::uint64_t>(s[i++] - '0');
            if (i < s.size() && s[i] == '*') ++i;
        }
        unsigned power = 0;
        if (i < s.size() && (s[i] == 'T' || s[i] == 't')) {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw std::invalid_argument("malformed exponent in polynomial: " + text);
                power = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    power = power * 10 + static_cast<unsigned>(s[i++] - '0');
            }
        } else if (!saw_coeff) {
            throw std::invalid_argument("malformed polynomial: " + text);
        }
        if (coeff >= field.q())
            throw std::invalid_argument("coefficient " + std::to_string(coeff) + " out of range for q=" +
                                        std::to_string(field.q()));
        if (acc.size() <= power) acc.resize(power + 1, 0);
        Elem c = static_cast<Elem>(coeff);
        if (neg) c = field.neg(c);
        acc[power] = field.add(acc[power], c);
        neg = false;
        if (i < s.size()) {
            if (s[i] == '+')
                ++i;
            else if (s[i] == '-') {
                neg = true;
                ++i;
            } else
                throw std::invalid_argument("malformed polynomial: " + text);
        }
    }
    return Poly(field, std::move(acc));
}

Poly parse_poly_token(const Field& field, const std::string& token) {
    if (!token.empty() && token.front() == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(token);
        } catch (const nlohmann::json::exception&) {
            throw std::invalid_argument("malformed coefficient list: " + token);
        }
        if (!j.is_array()) throw std::invalid_argument("malformed coefficient list: " + token);
        std::vector<Elem> coeffs;
        for (const auto& v : j) {
            if (!v.is_number_unsigned()) throw std::invalid_argument("malformed coefficient list: " + token);
            coeffs.push_back(v.get<Elem>());
        }
        return Poly(field, std::move(coeffs));
    }
    return parse_poly_human(field, token);
}

std::vector<Poly> parse_speeds(const Field& field, const CommonOpts& o) {
    std::vector<Poly> out;
    if (!o.speeds_file.empty()) {
        std::ifstream in(o.speeds_file);
        if (!in) throw std::invalid_argument("cannot open speeds file: " + o.speeds_file);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception&) {
            throw std::invalid_argument("speeds file is not valid JSON: " + o.speeds_file);
        }
        if (!j.is_array()) throw std::invalid_argument("speeds file must hold an array of coefficient lists");
        for (const auto& entry : j) {
            if (!entry.is_array())
                throw std::invalid_argument("speeds file must hold an array of coefficient lists");
            std::vector<Elem> coeffs;
            for (const auto& v : entry) {
                if (!v.is_number_unsigned())
                    throw std::invalid_argument("speeds file entries must be element encodings");
                coeffs.push_back(v.get<Elem>());
            }
            out.emplace_back(field, std::move(coeffs));
        }
        return out;
    }
    if (o.speeds.empty()) throw CLI::ValidationError("speeds", "specify --speeds or --speeds-file");
    // split on top-level commas only; bracketed lists carry their own commas
    int depth = 0;
    std::string cur;
    for (char c : o.speeds) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(parse_poly_token(field, cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(parse_poly_token(field, cur));
    if (out.empty()) throw std::invalid_argument("no speeds given");
    return out;
}

void render_table(const ordered_json& j, std::ostream& out, const std::string& prefix = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            render_table(value, out, prefix + key + ".");
        } else {
            out << prefix << key << ": " << value.dump() << "\n";
        }
    }
}

void emit(const ordered_json& j, const CommonOpts& o, std::ostream& out) {
    if (o.format == "table")
        render_table(j, out);
    else
        out << j.dump(2) << "\n";
}

void warn_duplicates(int dropped, std::ostream& err) {
    if (dropped > 0)
        err << "warning: " << dropped
            << " duplicate speed(s) dropped after monic normalization\n";
}

int run_covers(const CommonOpts& o, int k, int D, std::ostream& out, std::ostream& err) {
    Field field = resolve_field(o);
    auto speeds = parse_speeds(field, o);
    CoverOptions co;
    co.k = k;
    co.D = D;
    co.threads = o.threads;
    co.bitmap_cap_bits = o.bitmap_cap;
    CoverReport rep = covers(std::move(speeds), co);
    warn_duplicates(rep.duplicates_dropped, err);
    emit(cover_json(rep, field), o, out);
    return 0;
}

int run_loneliness(const CommonOpts& o, int D, const std::string& engine, std::ostream& out,
                   std::ostream& err) {
    Field field = resolve_field(o);
    auto speeds = parse_speeds(field, o);
    ordered_json j;
    put_field(j, field);
    j["engine"] = engine;
    if (engine == "direct") {
        auto [norm, dropped] = normalize_speeds(speeds);
        warn_duplicates(dropped, err);
        DirectOptions dopts;
        dopts.threads = o.threads;
        auto res = loneliness_direct(norm, dopts);
        j["exponent"] = res.exponent_k;
        j["witness"] = tail_witness_json(res.witness, res.exponent_k);
        j["speeds"] = family_json(norm);
    } else {
        CoverOptions co;
        co.D = D;
        co.threads = o.threads;
        co.bitmap_cap_bits = o.bitmap_cap;
        auto res = loneliness(speeds, co);
        warn_duplicates(res.cover.duplicates_dropped, err);
        j["exponent"] = res.exponent_k;
        j["witness"] = tail_witness_json(res.witness, res.exponent_k);
        j["D"] = res.cover.D;
        j["speeds"] = family_json(res.cover.speeds);
    }
    emit(j, o, out);
    return 0;
}

int run_min_cover(const CommonOpts& o, int k, int D, std::ostream& out) {
    Field field = resolve_field(o);
    Budget budget;
    budget.max_nodes = o.max_nodes;
    budget.max_seconds = o.max_seconds;
    budget.bitmap_cap_bits = o.bitmap_cap;
    MinCoverResult res = min_cover(field, k, D, budget, o.threads);
    ordered_json j;
    put_field(j, field);
    j["k"] = k;
    j["D"] = D;
    j["conjectured"] = res.conjectured;
    j["exact"] = res.exact;
    if (res.exact && res.found) {
        j["min_size"] = res.min_size;
        j["witness_family"] = family_json(res.witness_family);
    } else if (res.exact) {
        j["min_size"] = nullptr;  // no covering family at this degree bound
        j["witness_family"] = nullptr;
    } else {
        j["min_size"] = nullptr;
        j["lower_bound"] = res.lower_bound;
    }
    j["nodes"] = res.nodes;
    emit(j, o, out);
    return res.exact ? 0 : 3;
}

int run_sunflowers(const CommonOpts& o, int D, std::ostream& out, std::ostream& err) {
    Field field = resolve_field(o);
    auto speeds = parse_speeds(field, o);
    auto [norm, dropped] = normalize_speeds(speeds);
    warn_duplicates(dropped, err);
    SunflowerOptions so;
    so.threads = o.threads;
    so.bitmap_cap_bits = o.bitmap_cap;
    so.node_cap = o.max_nodes;
    SunflowerReport rep = max_sunflower(norm, D, so);
    emit(sunflower_json(rep, field), o, out);
    return 0;
}

int run_gen_extremal(const CommonOpts& o, int k, std::ostream& out) {
    Field field = resolve_field(o);
    auto fam = gen_extremal(field, k);
    ordered_json j;
    put_field(j, field);
    j["k"] = k;
    j["size"] = fam.size();
    j["family"] = family_json(fam);
    emit(j, o, out);
    return 0;
}

int run_irreducibles(const CommonOpts& o, unsigned degree, bool count_only, std::ostream& out) {
    Field field = resolve_field(o);
    ordered_json j;
    put_field(j, field);
    j["degree"] = degree;
    j["count"] = count_irreducible(degree, field.q());
    if (!count_only) j["list"] = family_json(irreducible_monic(field, degree));
    emit(j, o, out);
    return 0;
}

int run_verify(const CommonOpts& o, const std::string& suite, int trials, std::uint64_t seed,
               std::ostream& out) {
    SuiteParams params;
    if (o.q != 0) params.qs.push_back(o.q);
    params.trials = trials;
    params.seed = seed;
    params.threads = o.threads;
    params.budget.max_nodes = o.max_nodes;
    params.budget.max_seconds = o.max_seconds;
    params.budget.bitmap_cap_bits = o.bitmap_cap;
    SuiteReport rep = run_suite(suite, params);
    emit(rep.to_json(true), o, out);
    return rep.pass ? 0 : 1;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact loneliness computations for polynomial speed sets over finite fields"};
    app.require_subcommand(1);

    CommonOpts o;
    int k = 1, D = -1, gen_k = 1, trials = -1;
    unsigned degree = 2;
    bool count_only = false;
    std::string engine = "covering", suite;
    std::uint64_t seed = 0x5eed5eedULL;
    bool list_suites = false;

    auto* cov = app.add_subcommand("covers", "mark kernel points and report coverage of F_q^{D+k}");
    add_field_opts(cov, o);
    add_speed_opts(cov, o);
    add_output_opts(cov, o);
    cov->add_option("--k", k, "coverage level (default 1)");
    cov->add_option("--D", D, "ambient degree bound (default: max speed degree)");

    auto* lon = app.add_subcommand("loneliness", "exact loneliness exponent with a witness time");
    add_field_opts(lon, o);
    add_speed_opts(lon, o);
    add_output_opts(lon, o);
    lon->add_option("--D", D, "ambient degree bound (default: max speed degree)");
    lon->add_option("--engine", engine, "covering (default) or direct enumeration")
        ->check(CLI::IsMember({"covering", "direct"}));

    auto* mc = app.add_subcommand("min-cover", "least covering family size over monic speeds of bounded degree");
    add_field_opts(mc, o);
    add_output_opts(mc, o);
    mc->add_option("--k", k, "coverage level (default 1)");
    mc->add_option("--max-deg", D, "candidate degree bound")->required();

    auto* sf = app.add_subcommand("sunflowers", "maximum codimension-4 sunflower with classification");
    add_field_opts(sf, o);
    add_speed_opts(sf, o);
    add_output_opts(sf, o);
    sf->add_option("--D", D, "ambient degree bound (default: max speed degree)");

    auto* ge = app.add_subcommand("gen-extremal", "all monic polynomials of degree at most k");
    add_field_opts(ge, o);
    add_output_opts(ge, o);
    ge->add_option("--k", gen_k, "degree bound (default 1)");

    auto* ir = app.add_subcommand("irreducibles", "count or list monic irreducibles of one degree");
    add_field_opts(ir, o);
    add_output_opts(ir, o);
    ir->add_option("--degree", degree, "degree (default 2)");
    ir->add_flag("--count-only", count_only, "omit the list");

    auto* vf = app.add_subcommand("verify", "run a named verification suite");
    add_field_opts(vf, o);
    add_output_opts(vf, o);
    vf->add_option("--suite", suite, "suite name (see --list)");
    vf->add_option("--trials", trials, "trial count override for randomized suites");
    vf->add_option("--seed", seed, "seed for randomized suites");
    vf->add_flag("--list", list_suites, "list available suites");

    try {
        app.parse(argc, argv);
        if (vf->parsed()) {
            if (list_suites) {
                ordered_json j = suite_names();
                out << j.dump(2) << "\n";
                return 0;
            }
            if (suite.empty()) throw CLI::ValidationError("suite", "specify --suite <name> or --list");
            return run_verify(o, suite, trials, seed, out);
        }
        if (cov->parsed()) return run_covers(o, k, D, out, err);
        if (lon->parsed()) return run_loneliness(o, D, engine, out, err);
        if (mc->parsed()) return run_min_cover(o, k, D, out);
        if (sf->parsed()) return run_sunflowers(o, D, out, err);
        if (ge->parsed()) return run_gen_extremal(o, gen_k, out);
        if (ir->parsed()) return run_irreducibles(o, degree, count_only, out);
        err << "no command given\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& pe) {
        err << "usage error: " << pe.what() << "\n";
        return 2;
    } catch (const CapExceeded& ce) {
        err << "cap exceeded: " << ce.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& ia) {
        err << "usage error: " << ia.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace ffr
