#include "chronon/json_io.hpp"

#include <fstream>
#include <sstream>

namespace chronon::io {

namespace {

json matrix_to_json(const MatrixC& m) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    json out = {{"re", re}, {"im", im}};
    if (m.rows() == m.cols()) out["dim"] = m.rows();
    return out;
}

MatrixC matrix_from_json(const json& j) {
    if (!j.contains("re")) throw ParseError("matrix: field 're' required");
    const json& re = j.at("re");
    const json* im = j.contains("im") ? &j.at("im") : nullptr;
    if (re.empty() || !re.at(0).is_array()) throw ParseError("matrix: 're' must be a 2d array");
    Eigen::Index rows = static_cast<Eigen::Index>(re.size());
    Eigen::Index cols = static_cast<Eigen::Index>(re.at(0).size());
    if (j.contains("dim") && (j.at("dim").get<Eigen::Index>() != rows || rows != cols))
        throw ParseError("matrix: 'dim' does not match the 're' array");
    MatrixC m = MatrixC::Zero(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index k = 0; k < cols; ++k)
            m(i, k) = Complex(re.at(i).at(k).get<double>(),
                              im ? im->at(i).at(k).get<double>() : 0.0);
    return m;
}

std::vector<MatrixC> matrices_from_json(const json& j) {
    std::vector<MatrixC> out;
    for (const json& e : j) out.push_back(matrix_from_json(e));
    return out;
}

} // namespace

json element_to_json(const AlgElement& a) {
    json blocks = json::array();
    for (Eigen::Index x = 0; x < a.block_count(); ++x) blocks.push_back(matrix_to_json(a.block(x)));
    return {{"blocks", blocks}};
}

AlgElement element_from_json(const json& j) {
    if (!j.contains("blocks") || j.at("blocks").empty())
        throw ParseError("element: non-empty 'blocks' required");
    std::vector<MatrixC> blocks = matrices_from_json(j.at("blocks"));
    std::vector<Eigen::Index> dims;
    for (const MatrixC& b : blocks) dims.push_back(b.rows());
    return {AlgebraShape(dims), std::move(blocks)};
}

json channel_to_kraus_json(const AlgebraShape& dom, const AlgebraShape& cod,
                           const std::vector<MatrixC>& plus, const std::vector<MatrixC>& minus) {
    json jp = json::array(), jm = json::array();
    for (const MatrixC& k : plus) jp.push_back(matrix_to_json(k));
    for (const MatrixC& k : minus) jm.push_back(matrix_to_json(k));
    return {{"kind", "kraus"},
            {"dim_in", dom.block_dim(0)},
            {"dim_out", cod.block_dim(0)},
            {"plus", jp},
            {"minus", jm}};
}

Channel channel_from_json(const json& j) {
    if (!j.contains("kind")) throw ParseError("channel: 'kind' tag required");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "kraus") {
        Eigen::Index din = j.at("dim_in").get<Eigen::Index>();
        Eigen::Index dout = j.at("dim_out").get<Eigen::Index>();
        std::vector<MatrixC> plus = matrices_from_json(j.at("plus"));
        std::vector<MatrixC> minus =
            j.contains("minus") ? matrices_from_json(j.at("minus")) : std::vector<MatrixC>{};
        for (const MatrixC& k : plus)
            if (k.rows() != dout || k.cols() != din)
                throw ParseError("channel kraus: operator dims must match dim_out x dim_in");
        return ch::from_kraus(AlgebraShape::matrix(din), AlgebraShape::matrix(dout), plus, minus);
    }
    if (kind == "unitary") return ch::from_unitary(matrix_from_json(j.at("u")));
    if (kind == "ptrace") {
        std::string which = j.at("which").get<std::string>();
        if (which != "left" && which != "right")
            throw ParseError("channel ptrace: 'which' must be left or right");
        return ch::ptrace_channel(j.at("p").get<Eigen::Index>(), j.at("n").get<Eigen::Index>(),
                                  which == "left" ? la::Factor::Left : la::Factor::Right);
    }
    if (kind == "povm") return ch::povm_channel(matrices_from_json(j.at("effects")));
    if (kind == "pvm") return ch::pvm_channel(matrices_from_json(j.at("projectors")));
    if (kind == "preparation") {
        std::vector<AlgElement> states;
        for (const json& e : j.at("states")) states.push_back(element_from_json(e));
        return ch::preparation_channel(states);
    }
    if (kind == "stochastic") {
        const json& rows = j.at("matrix");
        Eigen::MatrixXd f(rows.size(), rows.at(0).size());
        for (Eigen::Index y = 0; y < f.rows(); ++y)
            for (Eigen::Index x = 0; x < f.cols(); ++x)
                f(y, x) = rows.at(y).at(x).get<double>();
        return ch::classical_channel(f);
    }
    if (kind == "discard_prepare") {
        std::vector<Eigen::Index> dims = j.at("dom").get<std::vector<Eigen::Index>>();
        return ch::discard_and_prepare(AlgebraShape(dims), element_from_json(j.at("sigma")));
    }
    throw ParseError("channel: unknown kind '" + kind + "'");
}

Process process_from_json(const json& j) {
    if (!j.contains("rho") || !j.contains("channel"))
        throw ParseError("process: fields 'rho' and 'channel' required");
    return {element_from_json(j.at("rho")), channel_from_json(j.at("channel"))};
}

Process process_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open process file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return process_from_json(j);
}

json measure_report_to_json(const MeasureReport& rep) {
    return {{"kind", rep.kind.encode()},
            {"s_in", rep.s_in},
            {"s_out", rep.s_out},
            {"s_psi", rep.s_psi},
            {"h_psi", rep.h_psi},
            {"i_psi", rep.i_psi},
            {"k_psi", rep.k_psi},
            {"conservation_residual", rep.conservation_residual}};
}

std::string measure_report_csv_header() { return "kind,s_in,s_out,s_psi,h_psi,i_psi,k_psi"; }

std::string measure_report_csv_row(const MeasureReport& rep) {
    std::ostringstream os;
    os.precision(12);
    os << rep.kind.encode() << ',' << rep.s_in << ',' << rep.s_out << ',' << rep.s_psi << ','
       << rep.h_psi << ',' << rep.i_psi << ',' << rep.k_psi;
    return os.str();
}

} // namespace chronon::io
