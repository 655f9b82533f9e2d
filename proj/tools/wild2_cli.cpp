#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wild2/errors.hpp"
#include "wild2/filtration.hpp"
#include "wild2/galois.hpp"
#include "wild2/rows.hpp"
#include "wild2/scan.hpp"
#include "wild2/tower.hpp"

namespace {

using namespace wild2;

std::string efg_str(int e, int f, int g) {
    std::ostringstream os;
    os << "(" << e << ", " << f << ", " << g << ")";
    return os.str();
}

std::string steps_str(const std::vector<StepKind>& steps) {
    std::ostringstream os;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) os << ", ";
        os << to_string(steps[i]);
    }
    return steps.empty() ? std::string("none") : os.str();
}

int cmd_classify(long long c, long precision, bool lattice, bool filtration, bool as_json) {
    ClassifiedEfg cls = classify_efg(c);
    OracleResult oracle = oracle_efg(c, precision);
    const bool agree = cls.efg == oracle.efg;

    nlohmann::json j;
    j["c"] = c;
    j["galois"] = to_string(cls.cls);
    j["degree"] = field_degree(cls.cls);
    j["classifier"] = {{"e", cls.efg.e}, {"f", cls.efg.f}, {"g", cls.efg.g},
                       {"row_id", cls.row_id}, {"condition", cls.condition}};
    nlohmann::json steps = nlohmann::json::array();
    for (auto s : oracle.steps) steps.push_back(to_string(s));
    j["oracle"] = {{"e", oracle.efg.e}, {"f", oracle.efg.f}, {"g", oracle.efg.g},
                   {"steps", steps}, {"precision_bits", oracle.precision_bits}};
    j["agree"] = agree;

    if (cls.cls == GaloisClass::D4) {
        InertiaDecomposition id = inertia_from_oracle(c, oracle);
        j["inertia_fixed_field"] = id.inertia_node;
        j["decomposition_fixed_field"] = id.decomposition_node;
        if (lattice) j["lattice"] = nlohmann::json::parse(lattice_to_json(subfield_lattice(c)));
    }

    if (filtration) {
        if (totally_ramified_case(c)) {
            FiltrationProfile fp = ramification_filtration(c, precision);
            nlohmann::json groups = nlohmann::json::array();
            for (const auto& g : fp.groups) groups.push_back(g);
            nlohmann::json disp;
            for (int i = 1; i < 8; ++i)
                disp[galois_elements()[i].label()] = fp.displacement[i];
            j["filtration"] = {{"profile", fp.profile_str()},
                               {"groups", groups},
                               {"displacement", disp},
                               {"precision_bits", fp.precision_bits}};
        } else {
            j["filtration"] = nullptr;
        }
    }

    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "c = " << c << "\n";
        std::cout << "galois class: " << to_string(cls.cls) << " (splitting field degree "
                  << field_degree(cls.cls) << ")\n";
        std::cout << "classifier:   (e, f, g) = " << efg_str(cls.efg.e, cls.efg.f, cls.efg.g)
                  << "  row " << cls.row_id << "  [" << cls.condition << "]\n";
        std::cout << "tower oracle: (e, f, g) = "
                  << efg_str(oracle.efg.e, oracle.efg.f, oracle.efg.g) << "  steps: "
                  << steps_str(oracle.steps) << "  (" << oracle.precision_bits << " bits)\n";
        std::cout << "agreement:    " << (agree ? "yes" : "NO") << "\n";
        if (j.contains("inertia_fixed_field")) {
            std::cout << "inertia fixed field:       " << j["inertia_fixed_field"].get<std::string>()
                      << "\n";
            std::cout << "decomposition fixed field: "
                      << j["decomposition_fixed_field"].get<std::string>() << "\n";
        }
        if (filtration) {
            if (j["filtration"].is_null()) {
                std::cout << "filtration:   not totally ramified\n";
            } else {
                std::cout << "filtration:   " << j["filtration"]["profile"].get<std::string>()
                          << "\n";
                for (int i = 1; i < 8; ++i)
                    std::cout << "  v_pi(" << galois_elements()[i].label() << "(pi) - pi) = "
                              << j["filtration"]["displacement"][galois_elements()[i].label()]
                                     .get<long>()
                              << "\n";
            }
        }
        if (lattice && cls.cls == GaloisClass::D4)
            std::cout << lattice_to_json(subfield_lattice(c)) << "\n";
    }
    return agree ? 0 : 1;
}

bool parse_family(const std::string& text, FamilySpec& out) {
    std::stringstream ss(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.empty() || parts.size() > 3 || parts[0].empty()) return false;
    out.row_id = parts[0];
    try {
        if (parts.size() > 1) out.k_max = std::stoll(parts[1]);
        if (parts.size() > 2) out.cof_max = std::stoll(parts[2]);
    } catch (const std::exception&) {
        return false;
    }
    return out.k_max >= 0 && out.cof_max >= 0;
}

int cmd_scan(const ScanOptions& opts, const std::string& format, const std::string& out_path) {
    ScanReport rep = run_scan(opts);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 2;
        }
        os = &file;
    }
    if (format == "json") *os << report_to_json(rep) << "\n";
    else write_csv(rep, *os);

    std::cerr << "scanned " << rep.summary.total << " values: " << rep.summary.agreements
              << " agree, " << rep.summary.discrepancies << " disagree, " << rep.summary.errors
              << " errors";
    if (rep.summary.max_precision_bits > 0)
        std::cerr << " (max precision " << rep.summary.max_precision_bits << " bits)";
    std::cerr << "\n";
    return (rep.summary.discrepancies == 0 && rep.summary.errors == 0) ? 0 : 1;
}

int cmd_dump_rows(const std::string& format) {
    if (format == "json") {
        // Group sub-rows under their (galois, e, f, g) class.
        nlohmann::json classes = nlohmann::json::array();
        for (const auto& row : all_rows()) {
            nlohmann::json* bucket = nullptr;
            for (auto& cl : classes) {
                if (cl["galois"] == to_string(row.cls) && cl["e"] == row.efg.e &&
                    cl["f"] == row.efg.f && cl["g"] == row.efg.g) {
                    bucket = &cl;
                    break;
                }
            }
            if (bucket == nullptr) {
                classes.push_back({{"galois", to_string(row.cls)},
                                   {"e", row.efg.e},
                                   {"f", row.efg.f},
                                   {"g", row.efg.g},
                                   {"rows", nlohmann::json::array()}});
                bucket = &classes.back();
            }
            (*bucket)["rows"].push_back({{"id", row.id}, {"condition", row.condition}});
        }
        std::cout << classes.dump(2) << "\n";
        return 0;
    }
    std::cout << "| row | galois | (e,f,g) | condition |\n";
    std::cout << "|-----|--------|---------|-----------|\n";
    for (const auto& row : all_rows()) {
        std::cout << "| " << row.id << " | " << to_string(row.cls) << " | (" << row.efg.e << ","
                  << row.efg.f << "," << row.efg.g << ") | " << row.condition << " |\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Splitting data of the prime 2 in the splitting field of (x^2+c)^2+c:\n"
        "a closed-form congruence classifier and an independent 2-adic tower\n"
        "construction, cross-checked against each other."};
    app.require_subcommand(1);

    long precision = 0;

    // classify
    long long c_value = 0;
    bool opt_lattice = false, opt_filtration = false, opt_json = false;
    CLI::App* classify = app.add_subcommand("classify", "Report both engines for a single c");
    classify->add_option("c", c_value, "Parameter of (x^2+c)^2+c")->required();
    classify->add_option("--precision", precision, "Working precision in bits (0 = automatic)")
        ->envname("WILD2_PRECISION");
    classify->add_flag("--lattice", opt_lattice, "Include the subfield lattice (dihedral case)");
    classify->add_flag("--filtration", opt_filtration,
                       "Include the ramification filtration when totally ramified");
    classify->add_flag("--json", opt_json, "Emit JSON instead of text");

    // scan
    ScanOptions scan_opts;
    std::vector<std::string> family_args;
    std::string format = "csv", out_path;
    CLI::App* scan = app.add_subcommand("scan", "Sweep a range of c and cross-check the engines");
    scan->add_option("--from", scan_opts.from, "First c (inclusive)");
    scan->add_option("--to", scan_opts.to, "Last c (inclusive)");
    scan->add_option("--family", family_args,
                     "Row family sweep ROW_ID[:K_MAX[:COF_MAX]] (repeatable)");
    scan->add_option("--jobs", scan_opts.jobs, "Worker threads (0 = default, 1 = serial)");
    scan->add_option("--precision", precision, "Working precision in bits (0 = automatic)")
        ->envname("WILD2_PRECISION");
    scan->add_flag("--filtration", scan_opts.with_filtration,
                   "Compute filtration profiles for totally ramified c");
    scan->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--out", out_path, "Write the report to a file instead of stdout");

    // dump-rows
    std::string rows_format = "markdown";
    CLI::App* dump = app.add_subcommand("dump-rows", "Print the classification table");
    dump->add_option("--format", rows_format, "Output format")
        ->check(CLI::IsMember({"markdown", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed())
            return cmd_classify(c_value, precision, opt_lattice, opt_filtration, opt_json);
        if (scan->parsed()) {
            for (const auto& text : family_args) {
                FamilySpec fam;
                if (!parse_family(text, fam)) {
                    std::cerr << "bad --family (expected ROW_ID[:K_MAX[:COF_MAX]]): " << text
                              << "\n";
                    return 2;
                }
                scan_opts.families.push_back(std::move(fam));
            }
            scan_opts.precision_bits = precision;
            return cmd_scan(scan_opts, format, out_path);
        }
        if (dump->parsed()) return cmd_dump_rows(rows_format);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
