#include "eigenscheme/io.hpp"

#include <fstream>
#include <sstream>

namespace eigenscheme {

namespace {

Rational json_rational(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError("expected a rational as string or integer");
}

}  // namespace

QMatrix parse_matrix_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long rows = 0;
    long cols = 0;
    if (!(in >> rows >> cols) || rows < 1 || cols < 1) throw ParseError("matrix header must be 'rows cols'");
    QMatrix M(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) {
            std::string tok;
            if (!(in >> tok)) throw ParseError("matrix has fewer than rows*cols entries");
            M(i, j) = parse_rational(tok);
        }
    std::string extra;
    if (in >> extra) throw ParseError("matrix has more than rows*cols entries");
    return M;
}

std::string matrix_to_text(const QMatrix& M) {
    std::string out = std::to_string(M.rows()) + " " + std::to_string(M.cols()) + "\n";
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) out += (j ? " " : "") + to_string(M(i, j));
        out += "\n";
    }
    return out;
}

QMatrix matrix_from_json(const Json& j) {
    try {
        const long rows = j.at("rows").get<long>();
        const long cols = j.at("cols").get<long>();
        const auto& entries = j.at("entries");
        if (rows < 1 || cols < 1) throw ParseError("matrix dimensions must be positive");
        if (!entries.is_array() || static_cast<long>(entries.size()) != rows * cols)
            throw ParseError("entries must hold rows*cols values");
        QMatrix M(rows, cols);
        for (long k = 0; k < rows * cols; ++k) M(k / cols, k % cols) = json_rational(entries[k]);
        return M;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad matrix record: ") + e.what());
    }
}

Json matrix_to_json(const QMatrix& M) {
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j) entries.push_back(to_string(M(i, j)));
    return Json{{"rows", M.rows()}, {"cols", M.cols()}, {"entries", entries}};
}

QMatrix parse_matrix(std::string_view text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && text[pos] == '{') {
        try {
            return matrix_from_json(Json::parse(text));
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("bad JSON: ") + e.what());
        }
    }
    return parse_matrix_text(text);
}

JordanSpec spec_from_json(const Json& j) {
    try {
        if (!j.is_array()) throw ParseError("Jordan spec must be a list");
        JordanSpec spec;
        for (const auto& e : j) {
            EigenBlocks eb{json_rational(e.at("lambda")), {}};
            for (const auto& b : e.at("blocks")) {
                if (!b.is_array() || b.size() != 2) throw ParseError("blocks must be [size, multiplicity] pairs");
                eb.blocks.push_back(BlockRun{b[0].get<int>(), b[1].get<int>()});
            }
            spec.eigenvalues.push_back(std::move(eb));
        }
        spec.validate();
        return spec;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad Jordan spec: ") + e.what());
    }
}

Json spec_to_json(const JordanSpec& spec) {
    Json out = Json::array();
    for (const auto& e : spec.eigenvalues) {
        Json blocks = Json::array();
        for (const auto& b : e.blocks) blocks.push_back({b.size, b.multiplicity});
        out.push_back({{"lambda", to_string(e.lambda)}, {"blocks", blocks}});
    }
    return out;
}

std::string spec_to_text(const JordanSpec& spec) {
    std::string out;
    for (const auto& e : spec.eigenvalues) {
        out += "lambda " + to_string(e.lambda) + ":";
        for (const auto& b : e.blocks) out += " " + std::to_string(b.multiplicity) + "x" + std::to_string(b.size);
        out += "\n";
    }
    return out;
}

Json report_to_json(const ComponentReport& report) {
    Json gens = Json::array();
    for (const auto& g : report.generators.generators()) gens.push_back(g.to_string());
    Json rad = Json::array();
    for (const auto& g : report.radical.generators()) rad.push_back(g.to_string());
    return Json{{"lambda", to_string(report.lambda)},
                {"j", report.j},
                {"generators", gens},
                {"radical", rad},
                {"dimension", report.dimension},
                {"degree", report.degree}};
}

std::string report_to_text(const ComponentReport& report) {
    std::string out = "component lambda=" + to_string(report.lambda) + " j=" + std::to_string(report.j) +
                      " dim=" + std::to_string(report.dimension) + " deg=" + std::to_string(report.degree) + "\n";
    out += "  generators:\n";
    for (const auto& g : report.generators.generators()) out += "    " + g.to_string() + "\n";
    out += "  radical:\n";
    for (const auto& g : report.radical.generators()) out += "    " + g.to_string() + "\n";
    return out;
}

std::string basis_to_text(const std::vector<Polynomial>& polys) {
    std::string out;
    for (const auto& p : polys) out += p.to_string() + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace eigenscheme
