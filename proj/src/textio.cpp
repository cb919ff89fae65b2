#include "mcm/textio.hpp"

#include <sstream>
#include <stdexcept>

namespace mcm {

namespace {

Int int_from_json(const OrderedJson& j) {
    if (!j.is_number_integer())
        throw std::invalid_argument("expected an integer, got " + j.dump());
    return Int(static_cast<long>(j.get<long long>()));
}

long long int_to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw std::invalid_argument("integer too large for JSON output");
    return v.get_si();
}

}  // namespace

IntMatrix parse_matrix_text(const std::string& text) {
    std::vector<IntVec> rows;
    size_t start = 0;
    bool saw_entry = false;
    int row_number = 0;
    while (start <= text.size()) {
        size_t semi = text.find(';', start);
        std::string chunk =
            semi == std::string::npos ? text.substr(start) : text.substr(start, semi - start);
        ++row_number;
        IntVec row;
        std::istringstream in(chunk);
        std::string tok;
        while (in >> tok) {
            try {
                row.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("matrix row " + std::to_string(row_number) +
                                            ": bad integer '" + tok + "'");
            }
        }
        if (!row.empty()) saw_entry = true;
        rows.push_back(std::move(row));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (!saw_entry) return IntMatrix();
    size_t width = rows.front().size();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty())
            throw std::invalid_argument("matrix row " + std::to_string(i + 1) + " is empty");
        if (rows[i].size() != width)
            throw std::invalid_argument("matrix row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(width));
    }
    return IntMatrix::from_rows(rows);
}

std::string format_matrix_text(const IntMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        if (i) out << "; ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j).get_str();
        }
    }
    return out.str();
}

OrderedJson matrix_to_json(const IntMatrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (int i = 0; i < m.rows(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_ll(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const OrderedJson& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
    std::vector<IntVec> rows;
    for (const auto& jr : j) {
        if (!jr.is_array()) throw std::invalid_argument("matrix row must be an array");
        IntVec row;
        for (const auto& je : jr) row.push_back(int_from_json(je));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return IntMatrix();
    size_t width = rows.front().size();
    for (const IntVec& r : rows)
        if (r.size() != width) throw std::invalid_argument("matrix rows have unequal lengths");
    return IntMatrix::from_rows(rows);
}

OrderedJson vec_to_json(const IntVec& v) {
    OrderedJson out = OrderedJson::array();
    for (const Int& x : v) out.push_back(int_to_ll(x));
    return out;
}

IntVec vec_from_json(const OrderedJson& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    IntVec v;
    for (const auto& je : j) v.push_back(int_from_json(je));
    return v;
}

OrderedJson presentation_to_json(const MonoidPresentation& p) {
    OrderedJson out;
    out["equations"] = matrix_to_json(p.equations);
    // a matrix with no rows serializes as []; record its width separately
    if (p.equations.rows() == 0 && p.equations.cols() > 0)
        out["columns"] = p.equations.cols();
    out["free_rank"] = p.free_rank;
    return out;
}

MonoidPresentation presentation_from_json(const OrderedJson& j) {
    if (!j.is_object()) throw std::invalid_argument("presentation JSON must be an object");
    MonoidPresentation p;
    if (!j.contains("equations"))
        throw std::invalid_argument("presentation JSON needs an \"equations\" array");
    p.equations = matrix_from_json(j.at("equations"));
    if (j.contains("columns")) {
        if (!j.at("columns").is_number_integer() || j.at("columns").get<long long>() < 0)
            throw std::invalid_argument("\"columns\" must be a nonnegative integer");
        int t = static_cast<int>(j.at("columns").get<long long>());
        if (p.equations.rows() == 0)
            p.equations = IntMatrix(0, t);
        else if (p.equations.cols() != t)
            throw std::invalid_argument("\"columns\" disagrees with the equation matrix width");
    }
    if (j.contains("free_rank")) {
        if (!j.at("free_rank").is_number_integer() || j.at("free_rank").get<long long>() < 0)
            throw std::invalid_argument("\"free_rank\" must be a nonnegative integer");
        p.free_rank = static_cast<int>(j.at("free_rank").get<long long>());
    }
    for (const auto& [key, _] : j.items())
        if (key != "equations" && key != "columns" && key != "free_rank")
            throw std::invalid_argument("unknown presentation key \"" + key + "\"");
    return p;
}

OrderedJson block_spec_to_json(const BlockSpec& s) {
    OrderedJson out;
    out["rank"] = s.group.free_rank;
    if (!s.group.torsion.empty()) {
        OrderedJson tor = OrderedJson::array();
        for (const Int& m : s.group.torsion) tor.push_back(int_to_ll(m));
        out["torsion"] = std::move(tor);
    }
    OrderedJson cls = OrderedJson::array();
    for (const IntVec& c : s.classes) cls.push_back(vec_to_json(c));
    out["classes"] = std::move(cls);
    return out;
}

BlockSpec block_spec_from_json(const OrderedJson& j) {
    if (!j.is_object()) throw std::invalid_argument("block spec JSON must be an object");
    BlockSpec s;
    if (!j.contains("rank") || !j.at("rank").is_number_integer() ||
        j.at("rank").get<long long>() < 0)
        throw std::invalid_argument("block spec needs a nonnegative integer \"rank\"");
    s.group.free_rank = static_cast<int>(j.at("rank").get<long long>());
    if (j.contains("torsion")) {
        if (!j.at("torsion").is_array())
            throw std::invalid_argument("\"torsion\" must be an array of moduli");
        for (const auto& je : j.at("torsion")) s.group.torsion.push_back(int_from_json(je));
    }
    if (!j.contains("classes") || !j.at("classes").is_array())
        throw std::invalid_argument("block spec needs a \"classes\" array");
    for (const auto& jc : j.at("classes")) s.classes.push_back(vec_from_json(jc));
    for (const auto& [key, _] : j.items())
        if (key != "rank" && key != "torsion" && key != "classes")
            throw std::invalid_argument("unknown block spec key \"" + key + "\"");
    return s;
}

OrderedJson group_to_json(const AbelianGroupInvariants& g) {
    OrderedJson out;
    out["free_rank"] = g.free_rank;
    OrderedJson tor = OrderedJson::array();
    for (const Int& d : g.torsion) tor.push_back(int_to_ll(d));
    out["torsion"] = std::move(tor);
    return out;
}

std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

OrderedJson json_parse_checked(const std::string& text) {
    try {
        return OrderedJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
}

std::string render_json(const OrderedJson& j, bool pretty) {
    return (pretty ? j.dump(2) : j.dump()) + "\n";
}

}  // namespace mcm
