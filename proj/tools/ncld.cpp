// ncld: experiment runner for NC measure computations.
//
// Subcommands build measures from JSON spec files and emit JSON reports plus
// CSV tables. Exit code 0 on pass, 1 on a failed check, 2 on usage/spec error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "ncld/classical.hpp"
#include "ncld/errors.hpp"
#include "ncld/gns.hpp"
#include "ncld/io.hpp"
#include "ncld/lebesgue.hpp"
#include "ncld/transforms.hpp"
#include "ncld/version.hpp"

using namespace ncld;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunConfig {
    std::string spec_path;
    std::string out_dir = ".";
    int level = 8;
    int depth = -1;     // -1: derive from command
    int out_depth = -1; // -1: level - 1
    double threshold = 0.0;  // 0: default schedule
    double tol = 1e-10;
    unsigned seed = 0;
};

json config_json(const RunConfig& c, const std::string& command) {
    return json{{"command", command}, {"spec", c.spec_path},   {"level", c.level},
                {"depth", c.depth},   {"out_depth", c.out_depth}, {"threshold", c.threshold},
                {"tol", c.tol},       {"seed", c.seed}};
}

json report_header(const RunConfig& c, const std::string& command) {
    json cfg = config_json(c, command);
    return json{{"library_version", kVersion},
                {"config", cfg},
                {"config_hash", std::hash<std::string>{}(cfg.dump())},
                {"seed", c.seed}};
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write '" + path.string() + "'");
    f << contents;
}

void write_csv(const fs::path& path, const std::function<void(std::ostream&)>& fn) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write '" + path.string() + "'");
    fn(f);
}

int cmd_moments(const RunConfig& c) {
    MeasureSpec spec = load_measure_spec(c.spec_path);
    fs::create_directories(c.out_dir);
    write_csv(fs::path(c.out_dir) / "moments.csv",
              [&](std::ostream& os) { write_moments_csv(os, spec.table); });
    std::cout << "wrote " << (fs::path(c.out_dir) / "moments.csv").string() << "\n";
    return 0;
}

int cmd_positivity(const RunConfig& c) {
    MeasureSpec spec = load_measure_spec(c.spec_path);
    int level = std::min(c.level, spec.table.depth);
    PositivityReport rep = positivity_check(spec.table, level, c.tol);
    json out = report_header(c, "positivity");
    out["level"] = level;
    out["min_eigenvalue"] = rep.min_eigenvalue;
    out["is_positive"] = rep.is_positive;
    fs::create_directories(c.out_dir);
    write_file(fs::path(c.out_dir) / "positivity.json", out.dump(2) + "\n");
    std::cout << out.dump(2) << "\n";
    return rep.is_positive ? 0 : 1;
}

int cmd_gns(const RunConfig& c) {
    MeasureSpec spec = load_measure_spec(c.spec_path);
    GnsSpace g = gns_space(spec.table, c.level);
    GnsRowIsometry iso = gns_row_isometry(g);
    json out = report_header(c, "gns");
    out["gram_min_eig"] = g.gram_min_eig;
    out["rank"] = g.rank();
    out["column_extreme_distance"] = column_extreme_distance(g);
    out["cuntz_defect"] = cuntz_defect(g, iso);
    out["isometry_defect"] = iso.isometry_defect;
    fs::create_directories(c.out_dir);
    write_file(fs::path(c.out_dir) / "gns.json", out.dump(2) + "\n");
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_decompose(const RunConfig& c, bool with_classify) {
    MeasureSpec spec = load_measure_spec(c.spec_path);
    int n_out = c.out_depth >= 0 ? c.out_depth : c.level - 1;
    DecompositionResult r = decompose(spec.table, c.level, c.threshold, n_out);
    json out = report_header(c, with_classify ? "classify" : "decompose");
    out["N"] = r.N;
    out["N_out"] = r.N_out;
    out["threshold"] = r.threshold;
    out["singular_rank"] = r.singular_rank;
    out["ac_mass"] = r.mu_ac.mass();
    out["sing_mass"] = r.mu_s.mass();
    if (with_classify) {
        Classification cls = classify(spec.table, c.level, c.threshold);
        out["verdict"] = cls.verdict;
        out["column_extreme_distance"] = cls.column_extreme_distance;
        out["cuntz_defect"] = cls.cuntz_defect;
    }
    fs::create_directories(c.out_dir);
    write_csv(fs::path(c.out_dir) / "mu_ac.csv",
              [&](std::ostream& os) { write_moments_csv(os, r.mu_ac); });
    write_csv(fs::path(c.out_dir) / "mu_s.csv",
              [&](std::ostream& os) { write_moments_csv(os, r.mu_s); });
    write_csv(fs::path(c.out_dir) / "pencil.csv", [&](std::ostream& os) {
        os << "s\n";
        os.precision(17);
        for (int i = 0; i < r.pencil_spectrum.size(); ++i) os << r.pencil_spectrum(i) << "\n";
    });
    write_file(fs::path(c.out_dir) / "decompose.json", out.dump(2) + "\n");
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_oracle(const RunConfig& c) {
    MeasureSpec spec = load_measure_spec(c.spec_path);
    if (!spec.classical) throw SpecParseError("oracle command needs a classical (d=1) spec");
    std::vector<int> schedule;
    for (int n = 8; n <= c.level; n *= 2) schedule.push_back(n);
    if (schedule.empty()) schedule.push_back(c.level);
    PencilComparison cmp = compare_to_pencil(*spec.classical, schedule, c.threshold, c.out_depth);
    json out = report_header(c, "oracle");
    out["max_moment_error"] = cmp.max_moment_error;
    json by_n = json::array();
    for (auto [n, err] : cmp.error_by_N) by_n.push_back({n, err});
    out["error_by_N"] = by_n;
    fs::create_directories(c.out_dir);
    write_csv(fs::path(c.out_dir) / "error_by_N.csv", [&](std::ostream& os) {
        os << "N,max_error\n";
        os.precision(17);
        for (auto [n, err] : cmp.error_by_N) os << n << ',' << err << "\n";
    });
    write_file(fs::path(c.out_dir) / "oracle.json", out.dump(2) + "\n");
    std::cout << out.dump(2) << "\n";
    return 0;
}

// Self-contained scenario: the boundary point mass at (1,0) for d = 2.
int cmd_example8(const RunConfig& c) {
    const int N = c.level;
    const int M = 60;
    json items = json::array();
    bool all_pass = true;
    auto item = [&](const std::string& name, bool pass, double value) {
        items.push_back({{"name", name}, {"pass", pass}, {"value", value}});
        all_pass = all_pass && pass;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << " (" << value << ")\n";
    };

    MomentTable mu = from_scalar_point({Complex{1, 0}, Complex{0, 0}}, std::max(M, N));

    // moment table: 1 on words avoiding letter 2, 0 otherwise
    {
        double worst = 0.0;
        for (const Word& w : enumerate_words(2, 4)) {
            bool has2 = std::find(w.letters.begin(), w.letters.end(), 2) != w.letters.end();
            worst = std::max(worst, std::abs(mu.value(w) - (has2 ? 0.0 : 1.0)));
        }
        item("moment_table", worst == 0.0, worst);
    }

    GnsSpace g = gns_space(mu, N);
    GnsRowIsometry iso = gns_row_isometry(g);

    {
        auto w = wandering_test(g, iso, g.class_of(Word{2}), N - 1, 1e-12);
        item("wandering_class_of_2", w.is_wandering && w.max_violation <= 1e-12, w.max_violation);
    }
    {
        double cd = cuntz_defect(g, iso);
        item("cuntz_defect", cd <= 1e-8, cd);
    }
    {
        double dist = column_extreme_distance(g);
        item("column_extreme_distance", dist <= 1e-8, dist);
    }
    {
        double worst = 0.0;
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            double x = -0.9 + 1.8 * i / 19.0;
            auto h = herglotz_eval(mu, MatrixPoint::scalar({Complex{x, 0}, Complex{0, 0}}), M);
            double err = std::abs(h.value(0, 0) - (1.0 + x) / (1.0 - x));
            worst = std::max(worst, err);
            ok = ok && err <= h.tail_bound * (1 + 1e-9) + 1e-12;
        }
        item("herglotz_vs_cayley_inverse", ok, worst);
    }
    {
        double worst = 0.0;
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            double x = -0.9 + 1.8 * i / 19.0;
            MatrixPoint z = MatrixPoint::scalar({Complex{x, 0}, Complex{0, 0}});
            auto h = herglotz_eval(mu, z, M);
            double err = std::abs(cayley_to_schur(mu, z, M)(0, 0) - x);
            worst = std::max(worst, err);
            ok = ok && err <= 1e-8 + 2.0 * h.tail_bound;
        }
        item("cayley_is_Z1", ok, worst);
    }
    {
        DecompositionResult r = decompose(mu, N, c.threshold, std::min(3, N - 1));
        Classification cls = classify(mu, N, c.threshold);
        item("decompose_singular", cls.verdict == "SINGULAR" && r.mu_ac.mass() <= 0.1,
             r.mu_ac.mass());
    }

    json out = report_header(c, "example8");
    out["N"] = N;
    out["M"] = M;
    out["items"] = items;
    out["status"] = all_pass ? "PASSED" : "FAILED";
    fs::create_directories(c.out_dir);
    write_file(fs::path(c.out_dir) / "example8.json", out.dump(2) + "\n");
    std::cout << "example8: " << out["status"].get<std::string>() << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NC measure computations: GNS diagnostics, transforms, Lebesgue decomposition"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string command;
    auto add_common = [&](CLI::App* sub, bool needs_spec) {
        if (needs_spec)
            sub->add_option("--spec", cfg.spec_path, "measure spec file (JSON)")->required();
        sub->add_option("--level", cfg.level, "Gram/GNS truncation level N");
        sub->add_option("--depth", cfg.depth, "moment depth override");
        sub->add_option("--out-depth", cfg.out_depth, "output moment depth (default N-1)");
        sub->add_option("--threshold", cfg.threshold, "pencil threshold in (0,1); 0 = default");
        sub->add_option("--tol", cfg.tol, "numerical tolerance");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--seed", cfg.seed, "seed for randomized sweeps");
    };

    add_common(app.add_subcommand("moments", "write the moment table as CSV"), true);
    add_common(app.add_subcommand("positivity", "Gram PSD check at a level"), true);
    add_common(app.add_subcommand("gns", "GNS diagnostics report"), true);
    add_common(app.add_subcommand("decompose", "Lebesgue decomposition vs NC Lebesgue measure"),
               true);
    add_common(app.add_subcommand("classify", "decomposition plus verdict and diagnostics"), true);
    add_common(app.add_subcommand("oracle", "d=1 classical oracle comparison"), true);
    add_common(app.add_subcommand("example8", "boundary point-mass reproduction scenario"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string& name = sub->get_name();
        if (name == "moments") return cmd_moments(cfg);
        if (name == "positivity") return cmd_positivity(cfg);
        if (name == "gns") return cmd_gns(cfg);
        if (name == "decompose") return cmd_decompose(cfg, false);
        if (name == "classify") return cmd_decompose(cfg, true);
        if (name == "oracle") return cmd_oracle(cfg);
        if (name == "example8") return cmd_example8(cfg);
    } catch (const SpecParseError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
