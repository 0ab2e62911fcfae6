// ppz: prime-pair and zeta-zero experiments from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ppz/dirichlet.hpp"
#include "ppz/errors.hpp"
#include "ppz/hlconstants.hpp"
#include "ppz/kernels.hpp"
#include "ppz/pair_cache.hpp"
#include "ppz/parallel.hpp"
#include "ppz/sieve.hpp"
#include "ppz/special.hpp"
#include "ppz/verify.hpp"
#include "ppz/zetazeros.hpp"

namespace {

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr const char* kVersion = "1.0.0";

struct Globals {
    std::string output;
    unsigned threads = 0;
    std::string cache_dir;
    std::string zeros_file;
};

// JSON with every double written as %.17g.
void write_json(std::ostream& os, const json& j, int indent = 0) {
    const std::string pad(indent, ' ');
    const std::string inner(indent + 2, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << inner << json(it.key()).dump() << ": ";
                write_json(os, it.value(), indent + 2);
            }
            os << "\n" << pad << "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            bool scalar = true;
            for (const auto& v : j)
                if (v.is_structured()) scalar = false;
            if (scalar) {
                os << "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) os << ", ";
                    write_json(os, j[i], indent + 2);
                }
                os << "]";
                return;
            }
            os << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ",\n";
                os << inner;
                write_json(os, j[i], indent + 2);
            }
            os << "\n" << pad << "]";
            return;
        }
        case json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                os << "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            std::string point = buf;
            if (point.find_first_of(".eEn") == std::string::npos) point += ".0";
            os << point;
            return;
        }
        default:
            os << j.dump();
    }
}

std::string csv_cell(const json& v) {
    if (v.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
        return buf;
    }
    if (v.is_string()) return v.get<std::string>();
    if (v.is_structured()) {
        std::string point = v.dump();
        for (auto& c : point)
            if (c == ',') c = ';';
        return point;
    }
    return v.dump();
}

void write_csv_table(std::ostream& os, const json& rows) {
    if (rows.empty()) return;
    std::vector<std::string> keys;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i)
            os << (i ? "," : "") << (row.contains(keys[i]) ? csv_cell(row[keys[i]]) : "");
        os << "\n";
    }
}

// CSV view of a result: its "rows" table when present, else field,value.
void write_csv(std::ostream& os, const json& result) {
    if (result.contains("rows") && result["rows"].is_array() && !result["rows"].empty() &&
        result["rows"][0].is_object()) {
        write_csv_table(os, result["rows"]);
        return;
    }
    os << "field,value\n";
    for (auto it = result.begin(); it != result.end(); ++it) {
        if (it.key() == "config" || it.key() == "assumptions") continue;
        os << it.key() << "," << csv_cell(it.value()) << "\n";
    }
}

void emit(const Globals& g, const std::string& command, json config, json result,
          const std::string& default_format = "json") {
    const std::string format = g.output.empty() ? default_format : g.output;
    if (format == "csv") {
        write_csv(std::cout, result);
        return;
    }
    json doc;
    doc["command"] = command;
    doc["version"] = kVersion;
    config["output"] = format;
    config["threads"] = g.threads;
    config["cache_dir"] = g.cache_dir;
    config["zeros_file"] = g.zeros_file;
    doc["config"] = config;
    for (auto it = result.begin(); it != result.end(); ++it) doc[it.key()] = it.value();
    write_json(std::cout, doc);
    std::cout << "\n";
}

json zero_assumptions() {
    return {{"zero_real_part", 0.5},
            {"note", "ingested ordinates gamma are taken as zeros 1/2 + i*gamma"}};
}

cplx parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {re, 0.0};
        }
        const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
        const double re = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        const double im = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::logic_error&) {
        throw ppz::ConfigError("cannot parse complex number '" + text + "' (expected re,im)");
    }
}

std::uint64_t to_count(double v, const std::string& what) {
    if (!(v >= 0.0) || v > 1.8e19 || std::floor(v) != v)
        throw ppz::ConfigError(what + " must be a non-negative integer, got " + std::to_string(v));
    return static_cast<std::uint64_t>(v);
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json cutoff_json(const ppz::CutoffR& c) {
    return {{"value", c.value}, {"lower", c.lower}, {"upper", c.upper}, {"below_first_zero", c.below_first_zero}};
}

json series_json(const ppz::SeriesResult& r) {
    json j;
    j["value_re"] = r.value.real();
    j["value_im"] = r.value.imag();
    j["terms_used"] = r.terms_used;
    j["truncation"] = r.truncation;
    j["tail_estimate"] = r.tail_estimate;
    j["tail_is_bound"] = r.tail_is_bound;
    if (r.cutoff) j["cutoff"] = cutoff_json(*r.cutoff);
    return j;
}

ppz::ZeroSet require_zeros(const Globals& g) {
    if (g.zeros_file.empty()) throw ppz::ConfigError("this command needs --zeros-file");
    return ppz::load_zeros(g.zeros_file);
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("PPZ_CACHE_DIR"); env && *env) return env;
    return ".ppz-cache";
}

// ---- count ---------------------------------------------------------------

struct CountArgs {
    std::vector<double> two_r;
    std::vector<double> checkpoints;
    double max_x = 0.0;
    bool full = false;
    bool no_cache = false;
};

int cmd_count(const Globals& g, const CountArgs& a) {
    std::vector<std::uint64_t> two_rs, checkpoints;
    if (a.two_r.empty()) {
        for (const auto& row : ppz::reference_pair_table()) two_rs.push_back(row.two_r);
    } else {
        for (double v : a.two_r) two_rs.push_back(to_count(v, "--two-r"));
    }
    if (a.checkpoints.empty()) {
        std::uint64_t upto = 1000;
        for (int i = 0; i < (a.full ? 6 : 5); ++i, upto *= 10) checkpoints.push_back(upto);
    } else {
        for (double v : a.checkpoints) checkpoints.push_back(to_count(v, "--checkpoints"));
    }
    for (auto r : two_rs)
        if (r == 0 || r % 2 != 0)
            throw ppz::DomainError("--two-r values must be even and positive, got " + std::to_string(r));
    for (std::size_t i = 1; i < checkpoints.size(); ++i)
        if (checkpoints[i] <= checkpoints[i - 1]) throw ppz::DomainError("--checkpoints must be increasing");
    const std::uint64_t max_x = a.max_x > 0 ? to_count(a.max_x, "--max-x") : checkpoints.back();
    if (checkpoints.back() > max_x) throw ppz::DomainError("--checkpoints exceed --max-x");

    std::map<std::uint64_t, std::vector<ppz::PairCountRecord>> found;
    std::vector<std::uint64_t> missing;
    for (auto r : two_rs) {
        bool hit = false;
        if (!a.no_cache) {
            if (auto cached = ppz::read_pair_cache(g.cache_dir, max_x, r)) {
                std::vector<ppz::PairCountRecord> picked;
                for (auto upto : checkpoints)
                    for (const auto& rec : *cached)
                        if (rec.upto == upto) picked.push_back(rec);
                if (picked.size() == checkpoints.size()) {
                    found[r] = picked;
                    hit = true;
                }
            }
        }
        if (!hit) missing.push_back(r);
    }
    if (!missing.empty()) {
        std::uint64_t widest = 0;
        for (auto r : missing) widest = std::max(widest, r);
        const auto table = ppz::PrimeTable::build(max_x + widest);
        const auto counts = ppz::count_prime_pairs_batch(table, missing, checkpoints);
        for (std::size_t i = 0; i < missing.size(); ++i) {
            found[missing[i]] = counts[i];
            if (!a.no_cache) ppz::write_pair_cache(g.cache_dir, max_x, missing[i], counts[i]);
        }
    }
    std::cerr << "count: " << two_rs.size() - missing.size() << " cached, " << missing.size() << " sieved\n";

    const std::string format = g.output.empty() ? "csv" : g.output;
    if (format == "csv") {
        std::cout << "two_r";
        for (auto upto : checkpoints) std::cout << "," << upto;
        std::cout << "\n";
        for (auto r : two_rs) {
            std::cout << r;
            for (const auto& rec : found[r]) std::cout << "," << rec.count;
            std::cout << "\n";
        }
        return kExitOk;
    }
    json rows = json::array();
    for (auto r : two_rs) {
        json counts = json::array();
        for (const auto& rec : found[r]) counts.push_back(rec.count);
        rows.push_back({{"two_r", r}, {"counts", counts}});
    }
    json config = {{"two_r", two_rs}, {"checkpoints", checkpoints}, {"max_x", max_x},
                   {"full", a.full}, {"cache_dir", g.cache_dir}, {"cache", !a.no_cache}};
    emit(g, "count", config, {{"columns", checkpoints}, {"rows", rows}});
    return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    bool full = false;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
    ppz::suite_criteria(a.suite);
    std::optional<ppz::ZeroSet> zeros;
    if (ppz::suite_needs_zeros(a.suite)) zeros = require_zeros(g);
    ppz::VerifyOptions options;
    options.full = a.full;
    options.zeros = zeros ? &*zeros : nullptr;
    json rows = json::array();
    bool all_passed = true;
    for (const auto& r : ppz::run_suite(a.suite, options)) {
        all_passed = all_passed && r.passed;
        rows.push_back(ppz::to_json(r));
    }
    json config = {{"suite", a.suite}, {"full", a.full}, {"zeros_file", g.zeros_file}};
    if (zeros) config["zeros"] = {{"source", zeros->source()}, {"count", zeros->size()}};
    const std::string format = g.output.empty() ? "json" : g.output;
    if (format == "csv") {
        std::cout << "criterion,name,passed,seconds\n";
        for (const auto& r : rows)
            std::cout << r["criterion"] << "," << r["name"].get<std::string>() << ","
                      << (r["passed"].get<bool>() ? "true" : "false") << "," << csv_cell(r["seconds"]) << "\n";
    } else {
        json result = {{"passed", all_passed}, {"results", rows}};
        if (zeros) result["assumptions"] = zero_assumptions();
        emit(g, "verify", config, result);
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

// ---- paircorr ------------------------------------------------------------

struct PaircorrArgs {
    double alpha = 1.0;
    std::size_t count = 0;
    double height = 0.0;
};

int cmd_paircorr(const Globals& g, const PaircorrArgs& a) {
    const ppz::ZeroSet zeros = require_zeros(g);
    double height = a.height;
    if (height <= 0.0) {
        const std::size_t n = a.count == 0 ? zeros.size() : a.count;
        if (n > zeros.size())
            throw ppz::CapacityError("--count " + std::to_string(n) + " exceeds the table (" +
                                     std::to_string(zeros.size()) + " zeros)");
        height = zeros[n - 1];
    }
    const auto f = ppz::pair_correlation_F(a.alpha, zeros, height);
    json config = {{"alpha", a.alpha}, {"count", a.count}, {"T", height}, {"zeros_file", g.zeros_file},
                   {"weight", "w(u) = 4/(4+u^2)"}};
    emit(g, "paircorr", config,
         {{"alpha", f.alpha}, {"T", f.height}, {"zeros_used", f.zeros_used}, {"value", f.value},
          {"imag_part", f.imag_part}, {"value_over_log_T", f.value / std::log(f.height)},
          {"assumptions", zero_assumptions()}});
    return kExitOk;
}

// ---- zerosum -------------------------------------------------------------

struct ZerosumArgs {
    std::string op;
    double lambda = 1.0;
    std::string point = "0.75,0";
    double cutoff = 0.0;
    std::size_t count = 0;
    std::string kernel = "jackson";
    std::vector<double> deltas = {0.2, 0.1, 0.05};
};

int cmd_zerosum(const Globals& g, const ZerosumArgs& a) {
    ppz::ZeroSet zeros = require_zeros(g);
    if (a.count > 0) {
        if (a.count > zeros.size())
            throw ppz::CapacityError("--count exceeds the table (" + std::to_string(zeros.size()) + " zeros)");
        zeros = zeros.truncated(a.count);
    }
    const auto kernel = ppz::SievingKernel::from_name(a.kernel);
    const cplx point = parse_complex(a.point);
    const ppz::CutoffR zero_cutoff =
        a.cutoff > 0.0 ? ppz::choose_cutoff(zeros, a.cutoff) : ppz::cutoff_after_count(zeros, zeros.size());
    json config = {{"op", a.op},         {"lambda", a.lambda},         {"s", complex_json(point)},
                   {"kernel", a.kernel}, {"cutoff_target", a.cutoff}, {"count", a.count},
                   {"zeros_file", g.zeros_file}};
    json result;
    if (a.op == "sigma1") {
        result = series_json(ppz::sigma1(point, a.lambda, kernel, zeros, zero_cutoff));
    } else if (a.op == "sigma2") {
        const auto parts = ppz::sigma2_square_parts(point, a.lambda, kernel, zeros, zero_cutoff);
        result = series_json(parts.total);
        result["same_sign"] = complex_json(parts.same_sign);
        result["opposite_sign"] = complex_json(parts.opposite_sign);
        result["same_sign_terms"] = parts.same_sign_terms;
        result["opposite_sign_terms"] = parts.opposite_sign_terms;
    } else if (a.op == "sigma4") {
        const auto r = ppz::sigma4(point, a.lambda, kernel, zeros);
        result = series_json(r.total);
        result["diagonal"] = complex_json(r.diagonal);
        result["diagonal_terms"] = r.diagonal_terms;
    } else if (a.op == "glambda") {
        result = series_json(ppz::g_lambda(point, a.lambda, kernel, zeros, zero_cutoff));
        result["remainder_R"] = ppz::remainder_R(a.lambda, kernel);
    } else if (a.op == "omega") {
        config["deltas"] = a.deltas;
        const auto rep = ppz::omega_probe(a.lambda, kernel, zeros, a.deltas);
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"delta", r.delta}, {"scaled", r.scaled}, {"scaled_tail", r.scaled_tail}, {"imag", r.imag}});
        result = {{"label", rep.label},    {"lambda", rep.lambda},   {"kernel", rep.kernel},
                  {"zeros_used", rep.zeros_used}, {"estimate", rep.estimate}, {"minus_area", -kernel.area()},
                  {"rows", rows}};
    } else {
        throw ppz::ConfigError("--op must be one of sigma1, sigma2, sigma4, glambda, omega");
    }
    result["assumptions"] = zero_assumptions();
    emit(g, "zerosum", config, result);
    return kExitOk;
}

// ---- series --------------------------------------------------------------

struct SeriesArgs {
    std::string op;
    double two_r = 2;
    double lambda = 4.0;
    std::string point = "2,0";
    double terms = 1e5;
    double max_terms = 1e7;
    std::string kernel = "jackson";
    std::vector<double> deltas = {0.2, 0.15, 0.1};
};

int cmd_series(const Globals& g, const SeriesArgs& a) {
    const auto kernel = ppz::SievingKernel::from_name(a.kernel);
    const std::uint64_t two_r = to_count(a.two_r, "--two-r");
    const std::uint64_t terms = to_count(a.terms, "--terms");
    const std::uint64_t max_terms = to_count(a.max_terms, "--max-terms");
    json config = {{"op", a.op},         {"two_r", two_r}, {"lambda", a.lambda}, {"s", a.point},
                   {"terms", terms},     {"max_terms", max_terms}, {"kernel", a.kernel}};
    json result;
    const auto band = static_cast<std::uint64_t>(std::ceil(a.lambda));
    if (a.op == "d2r" || a.op == "tlambda" || a.op == "vlambda" || a.op == "oddterms") {
        const cplx point = parse_complex(a.point);
        config["s"] = complex_json(point);
        const auto plan = ppz::TruncationPlan::make(point, terms);
        const std::uint64_t reach = terms + std::max(two_r, band);
        if (reach > ppz::kMaxSieveLimit) throw ppz::CapacityError("--terms too large");
        const auto table = ppz::PrimeTable::build(std::max<std::uint64_t>(reach, 2));
        ppz::SeriesResult r;
        if (a.op == "d2r")
            r = ppz::d_2r(point, two_r, plan, table);
        else if (a.op == "tlambda")
            r = ppz::t_lambda_expansion(point, a.lambda, kernel, plan, table);
        else if (a.op == "vlambda")
            r = ppz::v_lambda(point, a.lambda, kernel, plan, table);
        else
            r = ppz::odd_difference_terms(point, a.lambda, kernel, plan, table);
        result = series_json(r);
        result["plan_tail_bound"] = plan.tail_bound;
    } else if (a.op == "d0pole") {
        config["deltas"] = a.deltas;
        const auto table = ppz::PrimeTable::build(max_terms);
        const auto rep = ppz::d0_pole_probe(a.deltas, max_terms, table);
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"delta", r.delta},
                            {"n_terms", r.n_terms},
                            {"tail_bound", r.tail_bound},
                            {"tail_target_met", r.tail_target_met},
                            {"raw", r.raw},
                            {"tail_corrected", r.corrected},
                            {"model_valid", r.model_valid}});
        result = {{"target", rep.target}, {"trend_toward_target", rep.trend_toward_target}, {"rows", rows}};
    } else if (a.op == "c2rprobe" || a.op == "vprobe") {
        config["deltas"] = a.deltas;
        const auto table = ppz::PrimeTable::build(max_terms + std::max(two_r, band));
        const auto rep = a.op == "c2rprobe" ? ppz::c2r_residue_probe(two_r, a.deltas, max_terms, table)
                                            : ppz::v_lambda_residue_probe(a.lambda, kernel, a.deltas, max_terms, table);
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"delta", r.delta}, {"n_terms", r.n_terms}, {"tail_bound", r.tail_bound}, {"scaled", r.scaled}});
        result = {{"quantity", rep.quantity}, {"target", rep.target}, {"label", rep.label}, {"rows", rows}};
    } else {
        throw ppz::ConfigError("--op must be one of d2r, d0pole, tlambda, vlambda, oddterms, c2rprobe, vprobe");
    }
    emit(g, "series", config, result);
    return kExitOk;
}

// ---- kernel --------------------------------------------------------------

struct KernelArgs {
    std::string type = "jackson";
    double lambda = 1.0;
    std::vector<std::string> mellin_points;
    std::vector<double> e_points;
    std::vector<double> e_hat_points;
    bool residue = false;
};

int cmd_kernel(const Globals& g, const KernelArgs& a) {
    const auto kernel = ppz::SievingKernel::from_name(a.type);
    json config = {{"type", a.type}, {"lambda", a.lambda}, {"eval_mellin", a.mellin_points},
                   {"eval_E", a.e_points}, {"eval_E_hat", a.e_hat_points}, {"residue", a.residue}};
    json result = {{"kernel", kernel.name()},
                   {"lambda", a.lambda},
                   {"area", kernel.area()},
                   {"domain_limit", kernel.domain_limit()},
                   {"decay_offset", kernel.decay_offset()}};
    json rows = json::array();
    for (const auto& text : a.mellin_points) {
        const auto mv = ppz::mellin_M(kernel, a.lambda, parse_complex(text));
        rows.push_back({{"kind", "mellin"}, {"z_re", mv.arg.real()}, {"z_im", mv.arg.imag()},
                        {"value_re", mv.value.real()}, {"value_im", mv.value.imag()}, {"near_pole", mv.is_near_pole}});
    }
    for (double v : a.e_points)
        rows.push_back({{"kind", "E"}, {"z_re", v}, {"z_im", 0.0}, {"value_re", kernel.eval_E_lambda(a.lambda, v)},
                        {"value_im", 0.0}, {"near_pole", false}});
    for (double t : a.e_hat_points)
        rows.push_back({{"kind", "E_hat"}, {"z_re", t}, {"z_im", 0.0}, {"value_re", kernel.eval_E_hat(a.lambda, t)},
                        {"value_im", 0.0}, {"near_pole", false}});
    if (rows.size() == 1 && rows[0]["kind"] == "mellin") {
        result["value_re"] = rows[0]["value_re"];
        result["value_im"] = rows[0]["value_im"];
    }
    if (a.residue) {
        const auto p = ppz::mellin_residue_probe(kernel, a.lambda);
        result["residue"] = {{"radius", p.radius}, {"measured", complex_json(p.measured)},
                             {"expected", p.expected}, {"abs_error", p.abs_error}};
    }
    result["rows"] = rows;
    emit(g, "kernel", config, result);
    return kExitOk;
}

// ---- constants -----------------------------------------------------------

struct ConstantsArgs {
    double prime_limit = 1e7;
    double max_r = 15;
    double sm = 0;
    std::vector<double> li2_points;
};

int cmd_constants(const Globals& g, const ConstantsArgs& a) {
    const std::uint64_t limit = to_count(a.prime_limit, "--prime-limit");
    const std::uint64_t max_r = to_count(a.max_r, "--max-r");
    const auto c2 = ppz::twin_prime_constant_detail(limit);
    const ppz::SingularConstants constants(c2);
    json rows = json::array();
    for (std::uint64_t r = 1; r <= max_r; ++r) {
        const auto q = constants.ratio(r);
        rows.push_back({{"two_r", 2 * r}, {"ratio", q.str()}, {"C_2r", constants.c_2r(r)}});
    }
    json config = {{"prime_limit", limit}, {"max_r", max_r}, {"sm", a.sm}, {"li2", a.li2_points}};
    json result = {{"C2", c2.value},
                   {"finite_product", c2.finite_product},
                   {"tail_factor", c2.tail_factor},
                   {"error_bound", c2.error_bound}};
    if (a.sm > 0) {
        const std::uint64_t m = to_count(a.sm, "--sm");
        result["S_m"] = {{"m", m}, {"value", ppz::singular_sum(m)}};
    }
    if (!a.li2_points.empty()) {
        json li = json::array();
        for (double upto : a.li2_points) {
            const double v = ppz::li2(upto);
            li.push_back({{"x", upto}, {"li2", v}, {"two_C2_li2", 2.0 * c2.value * v}});
        }
        result["li2"] = li;
    }
    result["rows"] = rows;
    emit(g, "constants", config, result);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ppz: prime pairs, Hardy-Littlewood constants and zeta-zero sums"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    g.cache_dir = default_cache_dir();
    app.add_option("--output", g.output, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
    app.add_option("--cache-dir", g.cache_dir, "pair-count cache directory (env PPZ_CACHE_DIR)");
    app.add_option("--zeros-file", g.zeros_file, "zeta-zero ordinate table");

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "prime-pair counts pi_2r(x) in the layout of the reference table");
    count->add_option("--two-r", count_args.two_r, "even differences")->delimiter(',');
    count->add_option("--checkpoints", count_args.checkpoints, "x values")->delimiter(',');
    count->add_option("--max-x", count_args.max_x, "sieve bound (default: last checkpoint)");
    count->add_flag("--full", count_args.full, "include x = 1e8 in the default checkpoints");
    count->add_flag("--no-cache", count_args.no_cache, "neither read nor write the cache");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run acceptance checks");
    verify->add_option("--suite", verify_args.suite)->check(CLI::IsMember(ppz::suite_names()));
    verify->add_flag("--full", verify_args.full, "include the x = 1e8 column");

    PaircorrArgs pc_args;
    auto* paircorr = app.add_subcommand("paircorr", "pair-correlation statistic F_w(alpha, T)");
    paircorr->add_option("--alpha", pc_args.alpha);
    paircorr->add_option("--count", pc_args.count, "T = gamma_count");
    paircorr->add_option("--T", pc_args.height, "explicit T (overrides --count)");

    ZerosumArgs zs_args;
    auto* zerosum = app.add_subcommand("zerosum", "sums over zeta zeros");
    zerosum->add_option("--op", zs_args.op)->required()->check(
        CLI::IsMember({"sigma1", "sigma2", "sigma4", "glambda", "omega"}));
    zerosum->add_option("--lambda", zs_args.lambda);
    zerosum->add_option("--s", zs_args.point, "re,im");
    zerosum->add_option("--cutoff", zs_args.cutoff, "target T for the cutoff R (default: whole table)");
    zerosum->add_option("--count", zs_args.count, "use only the first N zeros");
    zerosum->add_option("--kernel", zs_args.kernel)->check(CLI::IsMember({"fejer", "jackson"}));
    zerosum->add_option("--deltas", zs_args.deltas, "delta grid for omega")->delimiter(',');

    SeriesArgs se_args;
    auto* series = app.add_subcommand("series", "truncated Dirichlet series");
    series->add_option("--op", se_args.op)->required()->check(
        CLI::IsMember({"d2r", "d0pole", "tlambda", "vlambda", "oddterms", "c2rprobe", "vprobe"}));
    series->add_option("--two-r", se_args.two_r);
    series->add_option("--lambda", se_args.lambda);
    series->add_option("--s", se_args.point, "re,im");
    series->add_option("--terms", se_args.terms);
    series->add_option("--max-terms", se_args.max_terms, "cap for adaptive probes");
    series->add_option("--kernel", se_args.kernel)->check(CLI::IsMember({"fejer", "jackson"}));
    series->add_option("--deltas", se_args.deltas)->delimiter(',');

    KernelArgs k_args;
    auto* kernel = app.add_subcommand("kernel", "sieving kernels and their Mellin transforms");
    kernel->add_option("--type", k_args.type)->check(CLI::IsMember({"fejer", "jackson"}));
    kernel->add_option("--lambda", k_args.lambda);
    kernel->add_option("--eval-mellin", k_args.mellin_points, "re,im (repeatable)");
    kernel->add_option("--eval-E", k_args.e_points)->delimiter(',');
    kernel->add_option("--eval-E-hat", k_args.e_hat_points)->delimiter(',');
    kernel->add_flag("--residue", k_args.residue, "probe the residue at z = 1");

    ConstantsArgs c_args;
    auto* constants = app.add_subcommand("constants", "twin-prime constant, C_2r and S_m");
    constants->add_option("--prime-limit", c_args.prime_limit);
    constants->add_option("--max-r", c_args.max_r);
    constants->add_option("--sm", c_args.sm, "also report S_m");
    constants->add_option("--li2", c_args.li2_points)->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        ppz::set_thread_count(g.threads);
        if (*count) return cmd_count(g, count_args);
        if (*verify) return cmd_verify(g, verify_args);
        if (*paircorr) return cmd_paircorr(g, pc_args);
        if (*zerosum) return cmd_zerosum(g, zs_args);
        if (*series) return cmd_series(g, se_args);
        if (*kernel) return cmd_kernel(g, k_args);
        if (*constants) return cmd_constants(g, c_args);
    } catch (const ppz::CapacityError& e) {
        std::cerr << "ppz: capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::bad_alloc&) {
        std::cerr << "ppz: out of memory\n";
        return kExitCapacity;
    } catch (const ppz::Error& e) {
        std::cerr << "ppz: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "ppz: " << e.what() << "\n";
        return kExitCapacity;
    }
    return kExitUsage;
}
