#include "ncld/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "ncld/errors.hpp"

namespace ncld {

using nlohmann::json;

namespace {

Eigen::VectorXcd parse_fock_vector(const json& arr, const FockTruncation& T) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(T.dim());
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 3)
            throw SpecParseError("fock vector entry must be [word, re, im]");
        Word w = parse_word(entry[0].get<std::string>(), T.d);
        int idx = T.index_of(w);
        if (idx < 0) throw SpecParseError("fock vector word exceeds truncation level");
        v[idx] += Complex{entry[1].get<double>(), entry[2].get<double>()};
    }
    return v;
}

}  // namespace

MeasureSpec parse_measure_spec(const json& j) {
    if (!j.contains("kind")) throw SpecParseError("measure spec missing 'kind'");
    MeasureSpec spec;
    spec.kind = j.at("kind").get<std::string>();

    if (spec.kind == "sum") {
        if (!j.contains("terms") || j.at("terms").empty())
            throw SpecParseError("sum spec needs nonempty 'terms'");
        std::vector<double> weights;
        if (j.contains("weights")) weights = j.at("weights").get<std::vector<double>>();
        bool first = true;
        std::size_t i = 0;
        for (const auto& term : j.at("terms")) {
            MeasureSpec sub = parse_measure_spec(term);
            MomentTable t = i < weights.size() ? scale(sub.table, weights[i]) : sub.table;
            spec.table = first ? t : add(spec.table, t);
            first = false;
            ++i;
        }
        if (j.contains("depth")) spec.table.depth = std::min(spec.table.depth, j.at("depth").get<int>());
        return spec;
    }

    if (!j.contains("d") || !j.contains("depth"))
        throw SpecParseError("measure spec missing 'd' or 'depth'");
    int d = j.at("d").get<int>();
    int depth = j.at("depth").get<int>();
    if (d < 1 || depth < 0) throw SpecParseError("measure spec needs d >= 1, depth >= 0");

    if (spec.kind == "vacuum") {
        spec.table = nc_lebesgue(d, depth);
    } else if (spec.kind == "scalar_point") {
        std::vector<Complex> z;
        for (const auto& c : j.at("z")) z.emplace_back(c[0].get<double>(), c[1].get<double>());
        if (static_cast<int>(z.size()) != d) throw SpecParseError("scalar_point needs d coordinates");
        spec.table = from_scalar_point(z, depth);
    } else if (spec.kind == "vector_state") {
        int fock_N = j.contains("fock_N") ? j.at("fock_N").get<int>() : 2 * depth;
        FockTruncation T(d, fock_N);
        Eigen::VectorXcd x = parse_fock_vector(j.at("x"), T);
        Eigen::VectorXcd y = j.contains("y") ? parse_fock_vector(j.at("y"), T) : x;
        spec.table = from_vector_state(T, x, y, depth);
    } else if (spec.kind == "classical") {
        if (d != 1) throw SpecParseError("classical spec requires d = 1");
        ClassicalMeasureSpec c;
        if (j.contains("density")) c.density = j.at("density").get<std::vector<double>>();
        if (j.contains("atoms"))
            for (const auto& a : j.at("atoms"))
                c.atoms.emplace_back(Complex{a[0].get<double>(), a[1].get<double>()},
                                     a[2].get<double>());
        spec.classical = c;
        spec.table = from_classical(c, depth);
    } else if (spec.kind == "moments") {
        spec.table = MomentTable(d, depth);
        for (const auto& entry : j.at("entries")) {
            Word w = parse_word(entry[0].get<std::string>(), d);
            if (w.length() > depth) throw SpecParseError("moment entry exceeds depth");
            spec.table.moments[w] = Complex{entry[1].get<double>(), entry[2].get<double>()};
        }
    } else {
        throw SpecParseError("unknown measure kind '" + spec.kind + "'");
    }
    return spec;
}

MeasureSpec load_measure_spec(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SpecParseError("cannot open measure spec '" + path + "'");
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw SpecParseError("bad JSON in '" + path + "': " + e.what());
    }
    return parse_measure_spec(j);
}

void write_moments_csv(std::ostream& os, const MomentTable& mu) {
    os << "word,re,im\n";
    std::vector<Word> words;
    words.reserve(mu.moments.size());
    for (const auto& [w, v] : mu.moments) words.push_back(w);
    std::sort(words.begin(), words.end(), deglex_less);
    os.precision(17);
    for (const Word& w : words) {
        Complex v = mu.moments.at(w);
        os << to_string(w, mu.d) << ',' << v.real() << ',' << v.imag() << '\n';
    }
}

MomentTable read_moments_csv(std::istream& is, int d, int depth) {
    MomentTable mu(d, depth);
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string wtok, retok, imtok;
        std::getline(ls, wtok, ',');
        std::getline(ls, retok, ',');
        std::getline(ls, imtok, ',');
        mu.moments[parse_word(wtok, d)] = Complex{std::stod(retok), std::stod(imtok)};
    }
    return mu;
}

json moment_table_to_json(const MomentTable& mu) {
    json entries = json::array();
    std::vector<Word> words;
    for (const auto& [w, v] : mu.moments) words.push_back(w);
    std::sort(words.begin(), words.end(), deglex_less);
    for (const Word& w : words) {
        Complex v = mu.moments.at(w);
        entries.push_back({to_string(w, mu.d), v.real(), v.imag()});
    }
    return json{{"d", mu.d}, {"depth", mu.depth}, {"entries", entries}};
}

}  // namespace ncld
