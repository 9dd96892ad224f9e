#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dpe/config.hpp"
#include "dpe/dpe_sim.hpp"
#include "dpe/errors.hpp"
#include "dpe/hamming_scheme.hpp"
#include "dpe/io.hpp"
#include "dpe/l1_double.hpp"
#include "dpe/l1_multi.hpp"
#include "dpe/l1_single.hpp"
#include "dpe/locators.hpp"
#include "dpe/oracles.hpp"
#include "dpe/shortened.hpp"

namespace {

using dpe::Int;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUncorrectable = 2;

struct SchemeFlags {
    std::string config_path;
    dpe::SchemeConfig config;
    Int n = 0, p = 0, k = 0, tau = 0;

    void attach(CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON scheme config file (flags override its fields)");
        sub->add_option("--scheme", config.scheme, "sec | sec-ded | dec | dec-ted | recursive | large-alphabet | hamming");
        sub->add_option("--q", config.q, "input alphabet size");
        sub->add_option("--ell", config.ell, "number of matrix rows");
        sub->add_option("--n", n, "code length (sec, sec-ded, large-alphabet)");
        sub->add_option("--p", p, "prime modulus (dec, dec-ted, recursive, optional for hamming)");
        sub->add_option("--k", k, "information length (hamming)");
        sub->add_option("--tau", tau, "number of correctable errors (recursive, large-alphabet, hamming)");
        sub->add_option("--theta", config.theta, "largest error magnitude (hamming; default ell (q-1)^2)");
        sub->add_option("--sigma", config.sigma, "extra detectable errors (hamming)");
        sub->add_option("--rho", config.rho, "tolerated erasures (hamming)");
        sub->add_option("--variant", config.variant, "sec-ded: parity|oddq|evenq; dec-ted: parity|oddq|evenq");
        sub->add_flag("--trimmed", config.trimmed, "recursive: single-error encode first and drop the zero syndrome column");
        sub->add_flag("--allow-suffix-conflicts", config.allow_suffix_conflicts,
                      "accept locators whose redundancy entries pair-sum to the modulus");
        sub->add_option("--shorten", config.shorten, "pin this many trailing information columns to zero and drop them");
    }

    dpe::SchemeConfig resolve(const CLI::App* sub) const {
        dpe::SchemeConfig c = config;
        if (!config_path.empty()) {
            c = dpe::read_json_file(config_path).get<dpe::SchemeConfig>();
            auto given = [sub](const char* name) { return sub->count(name) > 0; };
            if (given("--scheme")) c.scheme = config.scheme;
            if (given("--q")) c.q = config.q;
            if (given("--ell")) c.ell = config.ell;
            if (given("--theta")) c.theta = config.theta;
            if (given("--sigma")) c.sigma = config.sigma;
            if (given("--rho")) c.rho = config.rho;
            if (given("--variant")) c.variant = config.variant;
            if (given("--trimmed")) c.trimmed = config.trimmed;
            if (given("--allow-suffix-conflicts")) c.allow_suffix_conflicts = config.allow_suffix_conflicts;
            if (given("--shorten")) c.shorten = config.shorten;
        }
        if (sub->count("--n")) c.n = n;
        if (sub->count("--p")) c.p = p;
        if (sub->count("--k")) c.k = k;
        if (sub->count("--tau")) c.tau = tau;
        if (c.scheme.empty()) throw dpe::ParameterError("no scheme given; use --scheme or --config");
        return c;
    }
};

void emit(const std::string& path, const json& j) {
    if (path.empty() || path == "-")
        std::cout << dpe::render_json(j);
    else
        dpe::write_json_file(path, j);
}

std::vector<Int> parse_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw dpe::ParameterError("'" + item + "' is not an integer");
        }
    }
    return out;
}

json parse_inline_or_file(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        try {
            return json::parse(text);
        } catch (const json::parse_error& err) {
            throw dpe::ParameterError(std::string("fault spec is not valid JSON: ") + err.what());
        }
    }
    return dpe::read_json_file(text);
}

const dpe::Scheme& unwrap(const dpe::Scheme& s) {
    if (const auto* shortened = dynamic_cast<const dpe::ShortenedScheme*>(&s)) return unwrap(shortened->base());
    return s;
}

json params_report(const dpe::SchemeConfig& config, const dpe::Scheme& scheme) {
    json out = dpe::make_sidecar(config, scheme);
    json derived = {{"n", scheme.n()},
                    {"k", scheme.k()},
                    {"redundancy", scheme.redundancy()},
                    {"Q", scheme.output_alphabet()},
                    {"tau", scheme.tau()},
                    {"sigma", scheme.sigma()}};
    const dpe::Scheme& base = unwrap(scheme);
    if (const auto* s = dynamic_cast<const dpe::SingleErrorScheme*>(&base)) {
        const auto& loc = s->locators();
        derived["redundancy_lower_bound"] = dpe::redundancy_lower_bound(scheme.q(), scheme.n());
        if (s->variant() == dpe::SecVariant::SecDedOddQ) {
            const auto both = dpe::ded_redundancy(scheme.q(), loc.n);
            derived["m_modulus_2n_plus_1"] = both.m_basic;
            derived["m_modulus_4n_plus_2"] = both.m_ded;
        }
        derived["locator_check"] = dpe::to_string(dpe::validate_locators(loc).violated);
    } else if (const auto* r = dynamic_cast<const dpe::RecursiveScheme*>(&base)) {
        derived["level1_width"] = r->level1_width();
        derived["level2_width"] = r->level2_width();
        derived["repetitions"] = r->repetitions();
    } else if (const auto* h = dynamic_cast<const dpe::HammingScheme*>(&base)) {
        derived["redundancy_bound"] = dpe::redundancy_bound_hamming(h->q(), h->p(), h->tau(), h->inner_length());
    }
    out["derived"] = derived;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dpecodec: error-correcting encodings for dot-product engines"};
    app.require_subcommand(1);

    SchemeFlags params_flags, encode_flags, audit_flags;
    std::string in, out, sidecar, u_text, faults_text, log_path;
    std::uint64_t seed = 0;
    Int Q = 0;

    auto* params = app.add_subcommand("params", "print the parameters a scheme resolves to");
    params_flags.attach(params);
    params->add_option("--out", out, "output file (default stdout)");

    auto* encode = app.add_subcommand("encode", "append redundancy columns to a matrix");
    encode_flags.attach(encode);
    encode->add_option("--in", in, "input matrix A' (JSON)")->required();
    encode->add_option("--out", out, "output matrix A (JSON)")->required();
    encode->add_option("--sidecar", sidecar, "scheme sidecar path (default <out>.scheme.json)");

    auto* compute = app.add_subcommand("compute", "compute the exact product c = u A");
    compute->add_option("--in", in, "matrix A (JSON)")->required();
    compute->add_option("--u", u_text, "input vector, comma separated")->required();
    compute->add_option("--out", out, "output vector (default stdout)");

    auto* inject = app.add_subcommand("inject", "perturb a vector with a fault spec");
    inject->add_option("--in", in, "clean vector (JSON)")->required();
    inject->add_option("--faults", faults_text, "fault spec: JSON file or inline JSON list");
    inject->add_option("--seed", seed, "RNG seed (a seed inside the fault spec wins)");
    inject->add_option("--Q", Q, "output alphabet size when the vector file lacks one");
    inject->add_option("--out", out, "read vector (default stdout)");
    inject->add_option("--log", log_path, "fault log (JSON)");

    auto* decode = app.add_subcommand("decode", "recover the information prefix of a read vector");
    decode->add_option("--in", in, "read vector (JSON)")->required();
    decode->add_option("--sidecar", sidecar, "scheme sidecar written by encode")->required();
    decode->add_option("--out", out, "output (default stdout)");

    auto* audit = app.add_subcommand("audit", "brute-force distance and decoding audit of a small scheme");
    audit_flags.attach(audit);
    audit->add_option("--out", out, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*params) {
            const auto config = params_flags.resolve(params);
            emit(out, params_report(config, *dpe::make_scheme(config)));
        } else if (*encode) {
            const auto config = encode_flags.resolve(encode);
            const auto scheme = dpe::make_scheme(config);
            const auto a = scheme->encode(dpe::matrix_from_json(dpe::read_json_file(in)));
            if (static_cast<Int>(a.rows()) != scheme->ell())
                throw dpe::ParameterError("input matrix has " + std::to_string(a.rows()) + " rows, scheme ell is " +
                                          std::to_string(scheme->ell()));
            emit(out, dpe::matrix_to_json(a));
            emit(sidecar.empty() ? out + ".scheme.json" : sidecar, dpe::make_sidecar(config, *scheme));
        } else if (*compute) {
            const auto a = dpe::matrix_from_json(dpe::read_json_file(in));
            const auto c = dpe::compute_clean(parse_list(u_text), a);
            emit(out, dpe::vector_to_json(dpe::ReadVector(c), dpe::output_alphabet(a.q(), static_cast<Int>(a.rows()))));
        } else if (*inject) {
            const auto file = dpe::read_json_file(in);
            const auto clean = dpe::vector_from_json(file);
            if (clean.has_erasures()) throw dpe::ParameterError("inject expects a vector without erasures");
            const Int alphabet = inject->count("--Q") ? Q : file.value("Q", Int{0});
            if (alphabet < 1) throw dpe::ParameterError("output alphabet size unknown; pass --Q");
            const auto spec = faults_text.empty() ? dpe::FaultSpec{{}, seed}
                                                  : dpe::fault_spec_from_json(parse_inline_or_file(faults_text), seed);
            const auto report = dpe::inject(clean.values, spec, alphabet);
            emit(out, dpe::vector_to_json(report.y, alphabet));
            if (!log_path.empty()) {
                json log = dpe::to_json(report);
                log["seed"] = spec.seed;
                emit(log_path, log);
            }
        } else if (*decode) {
            const auto scheme = dpe::scheme_from_sidecar(dpe::read_json_file(sidecar));
            const auto outcome = scheme->decode(dpe::vector_from_json(dpe::read_json_file(in)));
            emit(out, dpe::outcome_to_json(outcome));
            return outcome.ok() ? kExitOk : kExitUncorrectable;
        } else if (*audit) {
            const auto config = audit_flags.resolve(audit);
            const auto report = dpe::run_audit(*dpe::make_scheme(config));
            json j = dpe::to_json(report);
            j["config"] = config;
            emit(out, j);
            return report.pass() ? kExitOk : kExitUncorrectable;
        }
    } catch (const dpe::ConsistencyError& err) {
        std::cerr << "internal consistency error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
