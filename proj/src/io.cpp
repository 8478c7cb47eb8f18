#include "ispec/io.hpp"

#include "ispec/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace ispec {

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ValidationError("JSON parse error in " + path + ": " + e.what());
    }
    return doc;
}

} // namespace

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& doc) {
    if (!doc.is_array() || doc.empty() || !doc[0].is_array())
        throw ValidationError("matrix: expected array of arrays");
    const std::size_t rows = doc.size(), cols = doc[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!doc[i].is_array() || doc[i].size() != cols)
            throw ValidationError("matrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) {
            if (!doc[i][j].is_number()) throw ValidationError("matrix: non-numeric entry");
            m(i, j) = doc[i][j].get<double>();
        }
    }
    return m;
}

json bands_to_json(const BandSet& bands) {
    json out;
    json arr = json::array();
    for (const Band& b : bands.bands) arr.push_back(json::array({b.lo, b.hi}));
    out["bands"] = std::move(arr);
    out["exact_lo"] = bands.exact_lo;
    out["exact_hi"] = bands.exact_hi;
    return out;
}

BandSet bands_from_json(const json& doc) {
    if (!doc.contains("bands")) throw ValidationError("bands: missing 'bands' array");
    const json& arr = doc["bands"];
    BandSet out(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_array() || arr[i].size() != 2)
            throw ValidationError("bands: each band must be [lo, hi]");
        out.bands[i] = {arr[i][0].get<double>(), arr[i][1].get<double>()};
    }
    if (doc.contains("exact_lo")) out.exact_lo = doc["exact_lo"].get<std::vector<bool>>();
    if (doc.contains("exact_hi")) out.exact_hi = doc["exact_hi"].get<std::vector<bool>>();
    if (out.exact_lo.size() != out.size() || out.exact_hi.size() != out.size())
        throw ValidationError("bands: exactness flag length mismatch");
    return out;
}

SymmetricIntervalMatrix ProblemFile::symmetric() const {
    if (kind != Kind::Symmetric)
        throw ValidationError("problem file is not of kind 'symmetric'");
    return SymmetricIntervalMatrix::from_bounds(lower, upper);
}

IntervalMatrix ProblemFile::rectangular() const {
    return IntervalMatrix::from_bounds(lower, upper);
}

ProblemFile ProblemFile::from_json(const json& doc) {
    ProblemFile pf;
    if (!doc.is_object()) throw ValidationError("problem file: expected a JSON object");
    const std::string kind = doc.value("kind", "symmetric");
    if (kind == "symmetric") pf.kind = Kind::Symmetric;
    else if (kind == "rectangular") pf.kind = Kind::Rectangular;
    else throw ValidationError("problem file: unknown kind '" + kind + "'");

    if (!doc.contains("lower") || !doc.contains("upper"))
        throw ValidationError("problem file: missing 'lower'/'upper' matrices");
    pf.lower = matrix_from_json(doc["lower"]);
    pf.upper = matrix_from_json(doc["upper"]);
    pf.rows = pf.lower.rows();
    pf.cols = pf.lower.cols();
    if (pf.upper.rows() != pf.rows || pf.upper.cols() != pf.cols)
        throw ValidationError("problem file: lower/upper shape mismatch");
    for (std::size_t i = 0; i < pf.rows; ++i)
        for (std::size_t j = 0; j < pf.cols; ++j)
            if (pf.lower(i, j) > pf.upper(i, j))
                throw ValidationError("problem file: lower > upper entry");
    if (pf.kind == Kind::Symmetric) {
        if (pf.rows != pf.cols) throw ValidationError("problem file: symmetric kind must be square");
        if (!pf.lower.is_symmetric(1e-12) || !pf.upper.is_symmetric(1e-12))
            throw ValidationError("problem file: symmetric kind requires symmetric bounds");
    }
    if (doc.contains("outer")) pf.outer = outer_bands_from_json(doc["outer"]);
    return pf;
}

ProblemFile ProblemFile::load(const std::string& path) {
    return from_json(load_json_file(path));
}

json ProblemFile::to_json() const {
    json doc;
    doc["kind"] = kind == Kind::Symmetric ? "symmetric" : "rectangular";
    doc["rows"] = rows;
    doc["cols"] = cols;
    doc["lower"] = matrix_to_json(lower);
    doc["upper"] = matrix_to_json(upper);
    if (outer) {
        json arr = json::array();
        for (const Band& b : *outer) arr.push_back(json::array({b.lo, b.hi}));
        doc["outer"] = std::move(arr);
    }
    return doc;
}

void ProblemFile::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << to_json().dump() << "\n";
}

std::vector<Band> outer_bands_from_json(const json& doc) {
    const json& arr = doc.is_object() && doc.contains("outer") ? doc["outer"] : doc;
    if (!arr.is_array()) throw ValidationError("outer bands: expected array of [lo, hi] pairs");
    std::vector<Band> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2)
            throw ValidationError("outer bands: each entry must be [lo, hi]");
        Band b{item[0].get<double>(), item[1].get<double>()};
        if (b.lo > b.hi) throw ValidationError("outer bands: lo > hi");
        out.push_back(b);
    }
    return out;
}

std::vector<Band> load_outer_bands(const std::string& path) {
    return outer_bands_from_json(load_json_file(path));
}

} // namespace ispec
