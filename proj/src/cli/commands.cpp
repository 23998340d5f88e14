#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncgram/cli.hpp"
#include "ncgram/formulas.hpp"
#include "ncgram/gram.hpp"
#include "ncgram/partition.hpp"
#include "ncgram/tensor_model.hpp"
#include "ncgram/tutte.hpp"

namespace ncgram::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { json, csv };

struct JobConfig {
    std::size_t n = 0;
    std::optional<long> N;
    bool symbolic = false;
    PartitionClass cls = PartitionClass::noncrossing;
    Format format = Format::json;
    std::string cache_path;
    bool verify = false;
    bool det = false;
    bool rank = false;
    bool timing = false;
    std::size_t max_points = 2;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

BigInt bell(std::size_t n) {
    // Bell triangle
    std::vector<BigInt> row{1};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto& v : row)
            next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

BigInt catalan(std::size_t n) {
    return binomial(2 * static_cast<long>(n), static_cast<long>(n)) / BigInt(static_cast<unsigned long>(n + 1));
}

BigInt class_size(std::size_t n, PartitionClass cls) {
    switch (cls) {
        case PartitionClass::all:
            return bell(n);
        case PartitionClass::noncrossing:
            return catalan(n);
        case PartitionClass::noncrossing_pairs:
            return n % 2 ? BigInt(0) : catalan(n / 2);
    }
    return 0;
}

void require_enumerable(std::size_t n) {
    if (bell(n) > kEnumerationBudget)
        throw BudgetExceeded("enumerating " + std::to_string(n) + " points exceeds the enumeration budget");
}

void require_determinant_size(const BigInt& dim) {
    if (dim > kDeterminantBudget)
        throw BudgetExceeded("matrix dimension " + dim.get_str() + " exceeds " +
                             std::to_string(kDeterminantBudget));
}

json coefficient(const BigInt& c) {
    if (c.fits_slong_p())
        return c.get_si();
    return c.get_str();
}

json coefficients(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients())
        arr.push_back(coefficient(c));
    return arr;
}

std::string scalar_text(const json& v) {
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v)
            s += (s.empty() ? "" : " ") + scalar_text(e);
        return s;
    }
    return v.dump();
}

// Scalars become key,value rows; arrays of objects become a titled table.
void write_csv(const json& doc, std::ostream& out) {
    for (const auto& [key, value] : doc.items())
        if (!(value.is_array() && !value.empty() && value.front().is_object()))
            out << key << "," << scalar_text(value) << "\n";
    for (const auto& [key, value] : doc.items()) {
        if (!(value.is_array() && !value.empty() && value.front().is_object()))
            continue;
        out << "# " << key << "\n";
        std::vector<std::string> columns;
        for (const auto& row : value)
            for (const auto& [col, unused] : row.items())
                if (std::find(columns.begin(), columns.end(), col) == columns.end())
                    columns.push_back(col);
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << (c ? "," : "") << columns[c];
        out << "\n";
        for (const auto& row : value) {
            for (std::size_t c = 0; c < columns.size(); ++c)
                out << (c ? "," : "") << (row.contains(columns[c]) ? scalar_text(row[columns[c]]) : "");
            out << "\n";
        }
    }
}

void emit(const json& doc, const JobConfig& cfg, std::ostream& out) {
    if (cfg.format == Format::csv)
        write_csv(doc, out);
    else
        out << doc.dump() << "\n";
}

std::string param_text(const JobConfig& cfg) { return cfg.symbolic ? "symbolic" : std::to_string(*cfg.N); }

void require_param(const JobConfig& cfg, bool allow_symbolic) {
    if (cfg.symbolic && !allow_symbolic)
        throw UsageError("--symbolic is not supported here");
    if (cfg.symbolic && cfg.N)
        throw UsageError("--param and --symbolic are mutually exclusive");
    if (!cfg.symbolic && !cfg.N)
        throw UsageError("one of --param or --symbolic is required");
    if (cfg.N && *cfg.N < 1)
        throw UsageError("--param must be positive");
}

int cmd_enumerate(const JobConfig& cfg, std::ostream& out) {
    require_enumerable(cfg.n);
    auto parts = enumerate(cfg.n, cfg.cls);
    if (cfg.format == Format::json) {
        json doc;
        doc["points"] = cfg.n;
        doc["class"] = class_name(cfg.cls);
        doc["partitions"] = json::array();
        for (const auto& p : parts)
            doc["partitions"].push_back(p.to_string());
        doc["count"] = parts.size();
        out << doc.dump() << "\n";
    } else {
        for (const auto& p : parts)
            out << p.to_string() << "\n";
        out << "count," << parts.size() << "\n";
    }
    return ok;
}

int cmd_gram(JobConfig cfg, std::ostream& out, std::ostream& err) {
    require_param(cfg, true);
    if (cfg.n < 1)
        throw UsageError("--points must be at least 1");
    if (cfg.rank && cfg.symbolic)
        throw UsageError("--rank needs a numeric --param");
    if (!cfg.det && !cfg.rank)
        cfg.det = true;
    require_enumerable(cfg.n);
    require_determinant_size(class_size(cfg.n, cfg.cls));

    auto start = std::chrono::steady_clock::now();
    std::string key = "gram:" + std::string(class_name(cfg.cls)) + ":" + std::to_string(cfg.n) + ":" +
                      param_text(cfg);
    std::optional<ResultCache> cache;
    if (!cfg.cache_path.empty())
        cache.emplace(cfg.cache_path, err);

    json doc;
    doc["n"] = cfg.n;
    doc["class"] = class_name(cfg.cls);
    if (cfg.symbolic)
        doc["N"] = "symbolic";
    else
        doc["N"] = *cfg.N;

    std::optional<ExactMatrix> matrix;
    auto gram = [&]() -> const ExactMatrix& {
        if (!matrix)
            matrix = build_gram(cfg.n, cfg.cls, cfg.symbolic ? std::nullopt : cfg.N);
        return *matrix;
    };

    if (cfg.det) {
        std::optional<std::string> cached = cache ? cache->find(key) : std::nullopt;
        std::string det_text;
        if (cached) {
            err << "cache hit: " << key << "\n";
            det_text = *cached;
        } else {
            Scalar det = determinant(gram());
            if (cfg.symbolic) {
                std::string joined;
                for (const auto& c : std::get<IntPolynomial>(det).coefficients())
                    joined += (joined.empty() ? "" : ",") + c.get_str();
                det_text = joined;
            } else {
                det_text = std::get<BigInt>(det).get_str();
            }
            if (cache)
                cache->append(key, det_text);
        }
        if (cfg.symbolic) {
            std::vector<BigInt> cs;
            std::stringstream ss(det_text);
            std::string item;
            while (std::getline(ss, item, ','))
                cs.emplace_back(item);
            doc["det"] = coefficients(IntPolynomial(std::move(cs)));
        } else {
            doc["det"] = det_text;
        }
    }
    if (cfg.rank)
        doc["rank"] = rank(gram());
    if (cfg.timing)
        doc["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    emit(doc, cfg, out);
    return ok;
}

json step_json(const RecursionStep& s) {
    json j;
    j["level_n"] = s.level_n;
    j["r"] = s.r;
    if (s.factor_beta) {
        j["factor_beta"] = s.factor_beta->get_str();
        j["exponent"] = s.exponent;
        j["B_case"] = s.B_case;
        j["B_scale_exponent"] = s.B_scale_exponent;
    }
    if (s.base_value)
        j["base_value"] = s.base_value->get_str();
    j["value"] = s.value.get_str();
    return j;
}

int cmd_recursion(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    require_param(cfg, false);
    if (cfg.n < 1)
        throw UsageError("--points must be at least 1");
    if (*cfg.N < 4)
        throw UsageError("--param must be at least 4: the recursion and the invertibility result cover N >= 4 only");
    require_enumerable(cfg.n);
    if (cfg.verify)
        require_determinant_size(catalan(cfg.n));

    RecursionResult res = recursion_det(cfg.n, *cfg.N);
    json doc;
    doc["n"] = cfg.n;
    doc["N"] = *cfg.N;
    doc["det"] = res.det.get_str();
    bool integral = res.det.get_den() == 1;
    doc["integral"] = integral;
    std::string status = integral ? "ok" : "non-integral";
    if (cfg.verify) {
        BigInt direct = determinant(build_A(cfg.n, 0, *cfg.N).integer());
        doc["direct"] = direct.get_str();
        if (BigRational(direct) != res.det) {
            status = "mismatch";
            err << "recursion " << res.det.get_str() << " differs from direct " << direct.get_str() << "\n";
        }
    }
    doc["status"] = status;
    doc["trace"] = json::array();
    for (const auto& s : res.trace)
        doc["trace"].push_back(step_json(s));
    emit(doc, cfg, out);
    return status == "ok" ? ok : verification_failure;
}

json check_json(const CheckResult& c) {
    json j;
    j["name"] = c.name;
    j["status"] = c.passed() ? "pass" : "fail";
    j["checked"] = c.checked;
    if (c.counterexample)
        j["counterexample"] = *c.counterexample;
    return j;
}

int cmd_laws(const JobConfig& cfg, std::ostream& out) {
    long N = cfg.N.value_or(2);
    if (cfg.symbolic || N < 1)
        throw UsageError("laws need a positive numeric --param");
    if (cfg.max_points < 1)
        throw UsageError("--max-points must be positive");
    dense_size(static_cast<std::size_t>(N), 2 * cfg.max_points);

    auto laws = check_functor_laws(static_cast<std::size_t>(N), cfg.max_points);
    auto invariants = check_partition_invariants(cfg.max_points);
    json doc;
    doc["N"] = N;
    doc["max_points"] = cfg.max_points;
    doc["laws"] = json::array();
    for (const auto& l : laws) {
        json j;
        j["law"] = l.name;
        j["N"] = N;
        j["max_points"] = cfg.max_points;
        j["status"] = l.passed() ? "pass" : "fail";
        j["checked"] = l.checked;
        if (l.counterexample)
            j["counterexample"] = *l.counterexample;
        doc["laws"].push_back(j);
    }
    doc["invariants"] = json::array();
    for (const auto& c : invariants)
        doc["invariants"].push_back(check_json(c));
    bool pass = all_passed(laws) && all_passed(invariants);
    doc["status"] = pass ? "pass" : "fail";
    emit(doc, cfg, out);
    return pass ? ok : verification_failure;
}

int cmd_formulas(const JobConfig& cfg, std::ostream& out) {
    require_param(cfg, false);
    if (cfg.n < 1)
        throw UsageError("--points must be at least 1");
    if (*cfg.N < 2)
        throw UsageError("--param must be at least 2");
    require_enumerable(2 * cfg.n);
    require_determinant_size(catalan(cfg.n));

    json doc;
    doc["N"] = *cfg.N;
    doc["difrancesco"] = json::array();
    bool pass = true;
    for (std::size_t n = 1; n <= cfg.n; ++n) {
        BigInt direct = nc2_gram_det(2 * n, *cfg.N);
        BigRational formula = difrancesco_det(n, *cfg.N);
        json j;
        j["n"] = n;
        j["N"] = *cfg.N;
        j["direct"] = direct.get_str();
        j["formula"] = formula.get_str();
        j["match"] = formula == BigRational(direct);
        pass = pass && j["match"].get<bool>();
        doc["difrancesco"].push_back(j);
    }
    // diagnostic only
    doc["kosmolinsky"] = json::array();
    for (const auto& c : kosmolinsky_check(cfg.n, *cfg.N)) {
        json j;
        j["n"] = c.n;
        j["N"] = c.N;
        j["variant"] = c.variant;
        j["direct"] = c.direct.get_str();
        j["formula"] = c.formula ? c.formula->get_str() : "undefined";
        j["match"] = c.match;
        doc["kosmolinsky"].push_back(j);
    }
    doc["status"] = pass ? "pass" : "fail";
    emit(doc, cfg, out);
    return pass ? ok : verification_failure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partition Gram matrices: enumeration, exact determinants, recursion checks"};
    app.require_subcommand(1);
    JobConfig cfg;
    long param = 0;
    std::string format;  // empty: per-command default

    const std::map<std::string, PartitionClass> classes{
        {"nc", PartitionClass::noncrossing},
        {"all", PartitionClass::all},
        {"nc2", PartitionClass::noncrossing_pairs}};

    auto common = [&](CLI::App* sub, bool needs_points) {
        auto* pts = sub->add_option("--points", cfg.n, "number of points n");
        if (needs_points)
            pts->required();
        sub->add_option("--format", format, "output format (enumerate defaults to csv lines, others to json)")->check(CLI::IsMember({"json", "csv"}));
    };
    auto with_param = [&](CLI::App* sub) { return sub->add_option("--param", param, "numeric value of N"); };

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list partitions in canonical text form");
    common(enumerate_cmd, true);
    enumerate_cmd->add_option("--class", cfg.cls, "nc, all or nc2")
        ->transform(CLI::CheckedTransformer(classes, CLI::ignore_case));

    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix determinant and rank");
    common(gram_cmd, true);
    gram_cmd->add_option("--class", cfg.cls, "nc, all or nc2")
        ->transform(CLI::CheckedTransformer(classes, CLI::ignore_case));
    auto* gram_param = with_param(gram_cmd);
    gram_cmd->add_flag("--symbolic", cfg.symbolic, "determinant as a polynomial in N")->excludes(gram_param);
    gram_cmd->add_flag("--det", cfg.det, "compute the determinant");
    gram_cmd->add_flag("--rank", cfg.rank, "compute the rank");
    gram_cmd->add_option("--cache", cfg.cache_path, "JSON-lines result cache");
    gram_cmd->add_flag("--timing", cfg.timing, "include elapsed_ms in the output");

    auto* rec_cmd = app.add_subcommand("recursion", "determinant via the stratified recursion");
    common(rec_cmd, true);
    with_param(rec_cmd)->required();
    rec_cmd->add_flag("--verify", cfg.verify, "compare with the direct determinant");

    auto* laws_cmd = app.add_subcommand("laws", "tensor, involution and composition laws of T_p");
    common(laws_cmd, false);
    with_param(laws_cmd);
    laws_cmd->add_option("--max-points", cfg.max_points, "points per row");

    auto* formulas_cmd = app.add_subcommand("formulas", "closed NC2 determinant formulas against direct values");
    common(formulas_cmd, true);
    with_param(formulas_cmd)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        for (auto* sub : {gram_cmd, rec_cmd, laws_cmd, formulas_cmd})
            if (sub->parsed() && sub->count("--param") > 0)
                cfg.N = param;
        if (format.empty())
            format = enumerate_cmd->parsed() ? "csv" : "json";
        cfg.format = format == "csv" ? Format::csv : Format::json;
        if (enumerate_cmd->parsed())
            return cmd_enumerate(cfg, out);
        if (gram_cmd->parsed())
            return cmd_gram(cfg, out, err);
        if (rec_cmd->parsed())
            return cmd_recursion(cfg, out, err);
        if (laws_cmd->parsed())
            return cmd_laws(cfg, out);
        if (formulas_cmd->parsed())
            return cmd_formulas(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return resource_error;
    } catch (const InvariantViolation& e) {
        err << "verification failure: " << e.what() << "\n";
        return verification_failure;
    }
    return usage_error;
}

}  // namespace ncgram::cli
