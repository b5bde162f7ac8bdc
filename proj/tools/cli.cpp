#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nuwigner/deformed.hpp"
#include "nuwigner/errata.hpp"
#include "nuwigner/realizations.hpp"
#include "nuwigner/serialize.hpp"
#include "nuwigner/single_mode.hpp"
#include "nuwigner/spin_reps.hpp"
#include "nuwigner/two_mode.hpp"

namespace nuwigner::cli {

namespace {

constexpr double kNumericTolerance = 1e-12;

const char* command_name(Command c) {
    switch (c) {
        case Command::Numbers: return "numbers";
        case Command::SingleMode: return "single-mode";
        case Command::TwoMode: return "two-mode";
        case Command::Realizations: return "realizations";
        case Command::SpinRep: return "spin-rep";
        case Command::HpRep: return "hp-rep";
        case Command::So3Rep: return "so3-rep";
        case Command::Verify: return "verify";
        case Command::Errata: return "errata";
    }
    return "?";
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Row {
    std::string section;
    std::string context;
    AlgebraReport report;
    std::vector<std::pair<double, double>> residuals;
};

// Collects reports and, for relations that hold, their numeric residuals.
class Collector {
public:
    explicit Collector(std::vector<double> nus) : nus_(std::move(nus)) {}

    void relations(const std::string& section, const std::string& context, const std::vector<Relation>& rels) {
        for (const auto& rel : rels) {
            Row row{section, context, check(rel), {}};
            if (row.report.verdict != Verdict::Fail) residuals(row, rel.lhs, effective_rhs(rel, row.report), rel.mask);
            rows_.push_back(std::move(row));
        }
    }

    void report(const std::string& section, const std::string& context, AlgebraReport r) {
        rows_.push_back(Row{section, context, std::move(r), {}});
    }

    void reports(const std::string& section, const std::string& context, std::vector<AlgebraReport> rs) {
        for (auto& r : rs) report(section, context, std::move(r));
    }

    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<double>& nus() const { return nus_; }

    ReportTally tally() const {
        ReportTally t;
        for (const auto& row : rows_) {
            switch (row.report.verdict) {
                case Verdict::Pass: ++t.pass; break;
                case Verdict::Fail: ++t.fail; break;
                case Verdict::PassWithCaveat: ++t.caveat; break;
            }
        }
        return t;
    }

private:
    void residuals(Row& row, const OperatorMatrix& lhs, const OperatorMatrix& rhs, const std::optional<RowMask>& mask) {
        for (double nu : nus_) {
            try {
                const double r = numeric_residual(lhs, rhs, mask, nu);
                const double bound = kNumericTolerance * (1.0 + masked_norm(lhs, mask, nu));
                row.residuals.emplace_back(nu, r);
                if (!(r < bound) && row.report.verdict != Verdict::Fail) {
                    row.report.verdict = Verdict::Fail;
                    row.report.witness =
                        Witness{0, 0, "residual < " + format_double(bound), "residual " + format_double(r)};
                    row.report.note = "numeric check failed at nu=" + format_double(nu);
                }
            } catch (const NegativeRadicand& e) {
                row.report.verdict = Verdict::Fail;
                row.report.witness = Witness{0, 0, "real evaluation", e.what()};
                row.report.note = "numeric evaluation failed at nu=" + format_double(nu);
            }
        }
    }

    std::vector<double> nus_;
    std::vector<Row> rows_;
};

Json row_json(const Row& row) {
    Json j = to_json(row.report);
    j["section"] = row.section;
    j["context"] = row.context;
    if (!row.residuals.empty()) {
        Json numeric = Json::array();
        for (const auto& [nu, r] : row.residuals) numeric.push_back(Json{{"nu", nu}, {"residual", r}});
        j["numeric"] = std::move(numeric);
    }
    return j;
}

Json rows_json(const Collector& c) {
    Json out = Json::array();
    for (const auto& row : c.rows()) out.push_back(row_json(row));
    return out;
}

Json tally_json(const ReportTally& t) { return Json{{"pass", t.pass}, {"fail", t.fail}, {"pass_with_caveat", t.caveat}}; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string rows_csv(const Collector& c) {
    std::ostringstream os;
    os << "section,context,relation,verdict,mode,nu,residual\n";
    for (const auto& row : c.rows()) {
        os << csv_field(row.section) << ',' << csv_field(row.context) << ',' << csv_field(row.report.relation_id) << ','
           << to_string(row.report.verdict) << ',' << to_string(row.report.mode) << ',';
        if (row.residuals.empty()) {
            os << format_double(c.nus().front()) << ",\n";
        } else {
            os << format_double(row.residuals.front().first) << ',' << format_double(row.residuals.front().second)
               << '\n';
        }
    }
    return os.str();
}

using NamedOperators = std::vector<std::pair<std::string, const OperatorMatrix*>>;

Json operators_json(const NamedOperators& ops) {
    Json j = Json::object();
    for (const auto& [name, m] : ops) j[name] = to_json(*m);
    return j;
}

Json numeric_operators_json(const NamedOperators& ops, const std::vector<double>& nus) {
    Json out = Json::array();
    for (double nu : nus) {
        Json mats = Json::object();
        for (const auto& [name, m] : ops) mats[name] = to_json(eval_matrix(*m, nu));
        out.push_back(Json{{"nu", nu}, {"operators", std::move(mats)}});
    }
    return out;
}

std::string operators_csv(const NamedOperators& ops, double nu) {
    std::ostringstream os;
    os << "operator,row,col,re,im\n";
    for (const auto& [name, m] : ops) {
        const ComplexMatrix v = eval_matrix(*m, nu);
        for (std::size_t r = 0; r < v.dim; ++r)
            for (std::size_t c = 0; c < v.dim; ++c)
                if (v(r, c) != std::complex<double>(0.0, 0.0))
                    os << csv_field(name) << ',' << r << ',' << c << ',' << format_double(v(r, c).real()) << ','
                       << format_double(v(r, c).imag()) << '\n';
    }
    return os.str();
}

struct Output {
    std::string text;
    int exit_code = kExitPass;
};

int verdict_exit(const ReportTally& t, bool strict) {
    if (t.fail > 0) return kExitFail;
    if (strict && t.caveat > 0) return kExitFail;
    return kExitPass;
}

Json base_document(const RunConfig& cfg) {
    Json nus = Json::array();
    for (double nu : cfg.nu_values) nus.push_back(nu);
    return Json{{"command", command_name(cfg.command)}, {"nu_values", std::move(nus)}, {"strict", cfg.strict}};
}

// A command that emits operators plus the reports that audit them.
Output operator_command(const RunConfig& cfg, Json doc, const NamedOperators& ops, const Collector& audit) {
    Output out;
    out.exit_code = verdict_exit(audit.tally(), cfg.strict);
    if (cfg.format == OutputFormat::Csv) {
        out.text = operators_csv(ops, cfg.nu_values.front());
        return out;
    }
    doc["operators"] = operators_json(ops);
    if (!cfg.nu_values.empty()) doc["numeric"] = numeric_operators_json(ops, cfg.nu_values);
    doc["reports"] = rows_json(audit);
    doc["summary"] = tally_json(audit.tally());
    out.text = dump_json(doc);
    return out;
}

Output reports_command(const RunConfig& cfg, Json doc, const Collector& audit) {
    Output out;
    out.exit_code = verdict_exit(audit.tally(), cfg.strict);
    if (cfg.format == OutputFormat::Csv) {
        out.text = rows_csv(audit);
        return out;
    }
    doc["reports"] = rows_json(audit);
    doc["summary"] = tally_json(audit.tally());
    out.text = dump_json(doc);
    return out;
}

std::string two_j_context(long two_j) { return "two_j=" + std::to_string(two_j); }

Output cmd_numbers(const RunConfig& cfg) {
    const long max_n = cfg.max_n.value_or(10);
    if (max_n < 0) throw UsageError("--max-n must be >= 0");
    Collector audit(cfg.nu_values);
    for (long n = 0; n <= max_n; ++n) audit.report("numbers", "n=" + std::to_string(n), check_pair_identities(n));
    for (long m = 0; m <= max_n; ++m)
        for (long n = 0; n <= max_n; ++n)
            audit.report("numbers", "m=" + std::to_string(m) + ",n=" + std::to_string(n), check_cross_identity(m, n));

    Output out;
    out.exit_code = verdict_exit(audit.tally(), cfg.strict);
    if (cfg.format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "n,value\n";
        for (long n = 0; n <= max_n; ++n)
            os << n << ',' << format_double(numeric_eval(deformed_number(n), cfg.nu_values.front()).real()) << '\n';
        out.text = os.str();
        return out;
    }
    Json doc = base_document(cfg);
    doc["max_n"] = max_n;
    Json numbers = Json::array();
    for (long n = 0; n <= max_n; ++n) {
        const NuPolynomial v = deformed_number(n);
        const NuPolynomial f = deformed_factorial(n);
        numbers.push_back(Json{{"n", n},
                               {"value", to_json(v)},
                               {"text", v.to_string()},
                               {"factorial", to_json(f)},
                               {"factorial_text", f.to_string()}});
    }
    doc["numbers"] = std::move(numbers);
    if (!cfg.nu_values.empty()) {
        Json numeric = Json::array();
        for (double nu : cfg.nu_values) {
            Json values = Json::array();
            for (long n = 0; n <= max_n; ++n) values.push_back(numeric_eval(deformed_number(n), nu).real());
            numeric.push_back(Json{{"nu", nu}, {"values", std::move(values)}});
        }
        doc["numeric"] = std::move(numeric);
    }
    doc["reports"] = rows_json(audit);
    doc["summary"] = tally_json(audit.tally());
    out.text = dump_json(doc);
    return out;
}

Output cmd_single_mode(const RunConfig& cfg) {
    const std::size_t dim = cfg.dim.value_or(6);
    const SingleModeSet s = build_single_mode(dim);
    Collector audit(cfg.nu_values);
    const std::string ctx = "dim=" + std::to_string(dim);
    audit.relations("single_mode", ctx, single_mode_relations(s));
    audit.report("single_mode", ctx, check_truncation_defect(s));
    Json doc = base_document(cfg);
    doc["dim"] = dim;
    return operator_command(cfg, std::move(doc), {{"a", &s.a}, {"adag", &s.a_dag}, {"N", &s.n_op}, {"R", &s.r_op}},
                            audit);
}

Output cmd_two_mode(const RunConfig& cfg) {
    const auto [d1, d2] = cfg.dims.value_or(std::pair<std::size_t, std::size_t>{3, 3});
    const TwoModeSet s = build_two_mode(d1, d2);
    Collector audit(cfg.nu_values);
    audit.relations("two_mode", "d1=" + std::to_string(d1) + ",d2=" + std::to_string(d2), two_mode_relations(s));
    Json doc = base_document(cfg);
    doc["dims"] = Json::array({d1, d2});
    return operator_command(cfg, std::move(doc),
                            {{"a1", &s.a[0]},
                             {"adag1", &s.a_dag[0]},
                             {"N1", &s.n_op[0]},
                             {"R1", &s.r_op[0]},
                             {"a2", &s.a[1]},
                             {"adag2", &s.a_dag[1]},
                             {"N2", &s.n_op[1]},
                             {"R2", &s.r_op[1]}},
                            audit);
}

Output cmd_realizations(const RunConfig& cfg) {
    const long max_n = cfg.max_n.value_or(6);
    if (max_n < 2) throw UsageError("--max-n must be >= 2 for realizations");
    Collector audit(cfg.nu_values.empty() ? std::vector<double>{0.0} : cfg.nu_values);
    audit.reports("realizations", "max_n=" + std::to_string(max_n), audit_realizations(static_cast<int>(max_n)));
    Json doc = base_document(cfg);
    doc["max_n"] = max_n;
    return reports_command(cfg, std::move(doc), audit);
}

long require_two_j(const RunConfig& cfg) {
    if (!cfg.two_j) throw UsageError(std::string(command_name(cfg.command)) + " requires --two-j");
    if (*cfg.two_j < 1) throw UsageError("--two-j must be >= 1");
    return *cfg.two_j;
}

Output cmd_spin_rep(const RunConfig& cfg) {
    const long tj = require_two_j(cfg);
    const SuNu2Rep rep = build_js_spin_rep(tj);
    Collector audit(cfg.nu_values);
    audit.relations("su_nu2", two_j_context(tj), su_nu2_relations(rep));
    audit.relations("su_nu2", two_j_context(tj), condensed_relations(rep));
    audit.relations("su_nu2", two_j_context(tj), example_claim_relations(rep));
    Json doc = base_document(cfg);
    doc["two_j"] = tj;
    return operator_command(cfg, std::move(doc),
                            {{"J+", &rep.j_plus},
                             {"J-", &rep.j_minus},
                             {"J0", &rep.j0},
                             {"P", &rep.p_op},
                             {"K", &rep.k_op},
                             {"Q", &rep.q_op},
                             {"R_J", &rep.r_j}},
                            audit);
}

Output cmd_hp_rep(const RunConfig& cfg, std::ostream& err) {
    const long tj = require_two_j(cfg);
    Json doc = base_document(cfg);
    doc["two_j"] = tj;
    try {
        const HPRep rep = build_hp_rep(tj);
        Collector audit(cfg.nu_values);
        audit.relations("hp", two_j_context(tj), hp_relations(rep));
        audit.report("hp", two_j_context(tj), hp_spectral_report(rep));
        return operator_command(cfg, std::move(doc),
                                {{"J+", &rep.j_plus}, {"J-", &rep.j_minus}, {"J0", &rep.j0}, {"R", &rep.r_op}}, audit);
    } catch (const OddTwoJNotClosed& e) {
        err << "nuwigner: " << e.what() << "\n";
        Output out;
        out.exit_code = kExitFail;
        if (cfg.format == OutputFormat::Csv) {
            out.text = "operator,row,col,re,im\n";
            return out;
        }
        doc["error"] = Json{{"type", "OddTwoJNotClosed"},
                            {"message", e.what()},
                            {"leakage", to_json(e.leakage())},
                            {"leakage_text", e.leakage().to_string()}};
        out.text = dump_json(doc);
        return out;
    }
}

Output cmd_so3_rep(const RunConfig& cfg) {
    const long tj = require_two_j(cfg);
    const SoNu3Rep rep = build_so_nu3(tj);
    Collector audit(cfg.nu_values);
    audit.relations("so_nu3", two_j_context(tj), so_nu3_relations(rep));
    Json doc = base_document(cfg);
    doc["two_j"] = tj;
    return operator_command(cfg, std::move(doc),
                            {{"Lx", &rep.l_x},
                             {"Ly", &rep.l_y},
                             {"Lz", &rep.l_z},
                             {"P", &rep.p_op},
                             {"K", &rep.k_op},
                             {"Q", &rep.q_op},
                             {"R_L", &rep.r_l}},
                            audit);
}

std::vector<Relation> extraction_relations(long two_j) {
    const auto d = static_cast<std::size_t>(two_j) + 1;
    const SuNu2Rep block = extract_js_block(build_two_mode(d, d), two_j);
    const SuNu2Rep closed = build_js_spin_rep(two_j);
    const std::string p = "su_nu2[two_j=" + std::to_string(two_j) + "]/two-mode block equals closed form: ";
    return {make_relation(p + "J+", block.j_plus, closed.j_plus), make_relation(p + "J-", block.j_minus, closed.j_minus),
            make_relation(p + "J0", block.j0, closed.j0),         make_relation(p + "P", block.p_op, closed.p_op),
            make_relation(p + "K", block.k_op, closed.k_op),      make_relation(p + "Q", block.q_op, closed.q_op),
            make_relation(p + "R_J", block.r_j, closed.r_j)};
}

bool wants(const RunConfig& cfg, const std::string& section) {
    return cfg.only.empty() || std::find(cfg.only.begin(), cfg.only.end(), section) != cfg.only.end();
}

Output cmd_verify(const RunConfig& cfg) {
    const long max_two_j = cfg.max_two_j.value_or(8);
    const auto [d1max, d2max] = cfg.dims.value_or(std::pair<std::size_t, std::size_t>{10, 10});
    const std::size_t max_dim = cfg.max_dim.value_or(25);
    const long max_n = cfg.max_n.value_or(15);
    const long max_number = cfg.max_number.value_or(50);
    if (max_two_j < 1) throw UsageError("--max-two-j must be >= 1");
    if (d1max < 2 || d2max < 2) throw UsageError("--dims values must be >= 2");
    if (max_dim < 2) throw UsageError("--max-dim must be >= 2");
    if (max_n < 2) throw UsageError("--max-n must be >= 2");
    if (max_number < 0) throw UsageError("--max-number must be >= 0");

    Collector audit(cfg.nu_values.empty() ? sample_nu_grid() : cfg.nu_values);
    if (wants(cfg, "numbers")) {
        for (long n = 0; n <= max_number; ++n) audit.report("numbers", "n=" + std::to_string(n), check_pair_identities(n));
        for (long m = 0; m <= max_number; ++m)
            for (long n = 0; n <= max_number; ++n)
                audit.report("numbers", "m=" + std::to_string(m) + ",n=" + std::to_string(n),
                             check_cross_identity(m, n));
    }
    if (wants(cfg, "single-mode")) {
        for (std::size_t d = 2; d <= max_dim; ++d) {
            const SingleModeSet s = build_single_mode(d);
            audit.relations("single_mode", "dim=" + std::to_string(d), single_mode_relations(s));
            audit.report("single_mode", "dim=" + std::to_string(d), check_truncation_defect(s));
        }
    }
    if (wants(cfg, "realizations"))
        audit.reports("realizations", "max_n=" + std::to_string(max_n), audit_realizations(static_cast<int>(max_n)));
    if (wants(cfg, "two-mode")) {
        for (std::size_t d1 = 2; d1 <= d1max; ++d1)
            for (std::size_t d2 = 2; d2 <= d2max; ++d2)
                audit.relations("two_mode", "d1=" + std::to_string(d1) + ",d2=" + std::to_string(d2),
                                two_mode_relations(build_two_mode(d1, d2)));
    }
    if (wants(cfg, "su2")) {
        for (long tj = 1; tj <= max_two_j; ++tj) {
            const SuNu2Rep rep = build_js_spin_rep(tj);
            audit.relations("su_nu2", two_j_context(tj), su_nu2_relations(rep));
            audit.relations("su_nu2", two_j_context(tj), condensed_relations(rep));
            audit.relations("su_nu2", two_j_context(tj), example_claim_relations(rep));
            audit.relations("su_nu2", two_j_context(tj), extraction_relations(tj));
        }
    }
    if (wants(cfg, "reference")) audit.reports("reference", "j<=2", diff_reference_matrices());
    if (wants(cfg, "hp")) {
        for (long tj = 1; tj <= max_two_j; ++tj) {
            if (tj % 2 == 1) {
                audit.report("hp", two_j_context(tj), check_hp_odd_closure(tj));
                continue;
            }
            const HPRep rep = build_hp_rep(tj);
            audit.relations("hp", two_j_context(tj), hp_relations(rep));
            audit.report("hp", two_j_context(tj), hp_spectral_report(rep));
        }
    }
    if (wants(cfg, "so3")) {
        for (long tj = 1; tj <= max_two_j; ++tj)
            audit.relations("so_nu3", two_j_context(tj), so_nu3_relations(build_so_nu3(tj)));
    }

    Json doc = base_document(cfg);
    Json only = Json::array();
    for (const auto& s : cfg.only) only.push_back(s);
    doc["parameters"] = Json{{"max_two_j", max_two_j},
                             {"dims", Json::array({d1max, d2max})},
                             {"max_dim", max_dim},
                             {"max_n", max_n},
                             {"max_number", max_number},
                             {"only", std::move(only)}};
    Json grid = Json::array();
    for (double nu : audit.nus()) grid.push_back(nu);
    doc["numeric_grid"] = std::move(grid);
    doc["numeric_tolerance"] = "residual < 1e-12 * (1 + |lhs|) (Frobenius, masked rows)";
    return reports_command(cfg, std::move(doc), audit);
}

Output cmd_errata(const RunConfig& cfg) {
    if (cfg.format == OutputFormat::Csv) throw UsageError("errata output is symbolic; use --format json");
    Json doc = base_document(cfg);
    Json findings = Json::array();
    bool all_confirmed = true;
    for (const auto& f : errata_findings()) {
        all_confirmed = all_confirmed && f.confirmed();
        findings.push_back(to_json(f));
    }
    doc["findings"] = std::move(findings);
    return Output{dump_json(doc), all_confirmed ? kExitPass : kExitFail};
}

void validate(const RunConfig& cfg) {
    for (double nu : cfg.nu_values)
        if (!(nu > -0.5) || !std::isfinite(nu)) throw UsageError("--nu values must be finite and > -1/2");
    if (cfg.format == OutputFormat::Csv && cfg.nu_values.size() != 1)
        throw UsageError("--format csv requires exactly one --nu value");
    if (cfg.dim && *cfg.dim < 2) throw UsageError("--dim must be >= 2");
    if (cfg.dims && (cfg.dims->first < 2 || cfg.dims->second < 2)) throw UsageError("--dims values must be >= 2");
}

std::filesystem::path resolve_output(const RunConfig& cfg) {
    const char* env = std::getenv("NUWIGNER_OUTPUT_DIR");
    const std::string ext = cfg.format == OutputFormat::Csv ? ".csv" : ".json";
    std::filesystem::path p = cfg.output_path ? std::filesystem::path(*cfg.output_path)
                                              : std::filesystem::path(std::string(command_name(cfg.command)) + ext);
    if (env && *env && p.is_relative()) p = std::filesystem::path(env) / p;
    return p;
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
    CLI::App app{"Exact and numeric audits of Wigner-deformed oscillator and spin algebras", "nuwigner"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    RunConfig cfg;
    std::string format = "json";
    std::string output;
    std::vector<std::size_t> dims;
    long two_j = 0;
    long max_n = 0;
    long max_two_j = 0;
    long max_number = 0;
    std::size_t dim = 0;
    std::size_t max_dim = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--nu", cfg.nu_values, "Evaluate numerically at this nu (repeatable)")->take_all();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", output, "Output file (relative to $NUWIGNER_OUTPUT_DIR if set)");
        sub->add_flag("--strict", cfg.strict, "Treat PASS_WITH_CAVEAT as failure");
    };

    auto* numbers = app.add_subcommand("numbers", "Table of deformed numbers [n]_nu and their identities");
    numbers->add_option("--max-n", max_n, "Largest n")->check(CLI::NonNegativeNumber);
    common(numbers);

    auto* single = app.add_subcommand("single-mode", "Truncated single-mode operators and relations");
    single->add_option("--dim", dim, "Fock space dimension")->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
    common(single);

    auto* two = app.add_subcommand("two-mode", "Truncated two-mode operators and relations");
    two->add_option("--dims", dims, "Mode dimensions d1 d2")->expected(2);
    common(two);

    auto* real = app.add_subcommand("realizations", "Coordinate realizations on polynomials");
    real->add_option("--max-n", max_n, "Largest basis index")->check(CLI::Range(2L, 64L));
    common(real);

    auto* spin = app.add_subcommand("spin-rep", "su_nu(2) representation of spin j");
    spin->add_option("--two-j", two_j, "2j")->required()->check(CLI::PositiveNumber);
    common(spin);

    auto* hp = app.add_subcommand("hp-rep", "Holstein-Primakoff realization of spin j");
    hp->add_option("--two-j", two_j, "2j")->required()->check(CLI::PositiveNumber);
    common(hp);

    auto* so3 = app.add_subcommand("so3-rep", "so_nu(3) representation of spin j");
    so3->add_option("--two-j", two_j, "2j")->required()->check(CLI::PositiveNumber);
    common(so3);

    auto* verify = app.add_subcommand("verify", "Run the full audit and report every relation");
    bool all = false;
    auto* all_flag = verify->add_flag("--all", all, "Run every section (default)");
    verify->add_option("--only", cfg.only, "Run only these sections")
        ->check(CLI::IsMember({"numbers", "single-mode", "realizations", "two-mode", "su2", "reference", "hp", "so3"}))
        ->excludes(all_flag);
    verify->add_option("--max-two-j", max_two_j, "Largest 2j")->check(CLI::PositiveNumber);
    verify->add_option("--dims", dims, "Largest two-mode dimensions d1 d2")->expected(2);
    verify->add_option("--max-dim", max_dim, "Largest single-mode dimension")->check(CLI::Range(std::size_t{2}, std::size_t{256}));
    verify->add_option("--max-n", max_n, "Largest realization index")->check(CLI::Range(2L, 64L));
    verify->add_option("--max-number", max_number, "Largest n, m for deformed-number identities")
        ->check(CLI::NonNegativeNumber);
    common(verify);

    auto* errata = app.add_subcommand("errata", "Printed formulas that disagree with direct computation");
    common(errata);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        exit_code = app.exit(e, out, err);
        return std::nullopt;
    } catch (const CLI::CallForAllHelp& e) {
        exit_code = app.exit(e, out, err);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        exit_code = kExitUsage;
        return std::nullopt;
    }

    const std::vector<std::pair<CLI::App*, Command>> table{
        {numbers, Command::Numbers}, {single, Command::SingleMode}, {two, Command::TwoMode},
        {real, Command::Realizations}, {spin, Command::SpinRep},   {hp, Command::HpRep},
        {so3, Command::So3Rep},        {verify, Command::Verify},   {errata, Command::Errata}};
    for (const auto& [sub, command] : table)
        if (sub->parsed()) cfg.command = command;

    CLI::App* sub = app.get_subcommands().front();
    auto given = [sub](const char* name) {
        const CLI::Option* o = sub->get_option_no_throw(name);
        return o != nullptr && o->count() > 0;
    };
    if (given("--two-j")) cfg.two_j = two_j;
    if (given("--max-n")) cfg.max_n = max_n;
    if (given("--max-two-j")) cfg.max_two_j = max_two_j;
    if (given("--max-number")) cfg.max_number = max_number;
    if (given("--dim")) cfg.dim = dim;
    if (given("--max-dim")) cfg.max_dim = max_dim;
    if (given("--dims")) cfg.dims = std::pair{dims.at(0), dims.at(1)};
    if (given("--output")) cfg.output_path = output;
    cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    exit_code = kExitPass;
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Output result;
    try {
        validate(cfg);
        switch (cfg.command) {
            case Command::Numbers: result = cmd_numbers(cfg); break;
            case Command::SingleMode: result = cmd_single_mode(cfg); break;
            case Command::TwoMode: result = cmd_two_mode(cfg); break;
            case Command::Realizations: result = cmd_realizations(cfg); break;
            case Command::SpinRep: result = cmd_spin_rep(cfg); break;
            case Command::HpRep: result = cmd_hp_rep(cfg, err); break;
            case Command::So3Rep: result = cmd_so3_rep(cfg); break;
            case Command::Verify: result = cmd_verify(cfg); break;
            case Command::Errata: result = cmd_errata(cfg); break;
        }
    } catch (const UsageError& e) {
        err << "nuwigner: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidDimension& e) {
        err << "nuwigner: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidSpin& e) {
        err << "nuwigner: " << e.what() << "\n";
        return kExitUsage;
    }

    const char* env = std::getenv("NUWIGNER_OUTPUT_DIR");
    if (!cfg.output_path && !(env && *env)) {
        out << result.text;
        out.flush();
        return result.exit_code;
    }
    const std::filesystem::path path = resolve_output(cfg);
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream file(path, std::ios::binary);
    file << result.text;
    file.close();
    if (!file) {
        err << "nuwigner: cannot write " << path.string() << "\n";
        return kExitUsage;
    }
    return result.exit_code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    int code = kExitUsage;
    const std::optional<RunConfig> cfg = parse_args(args, out, err, code);
    if (!cfg) return code;
    return run(*cfg, out, err);
}

}  // namespace nuwigner::cli
