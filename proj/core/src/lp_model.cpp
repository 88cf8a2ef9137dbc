#include <sstream>
#include <stdexcept>

#include "ddchrom/lp.hpp"

namespace ddchrom {

int LpModel::add_variable(Rational lo, std::optional<Rational> up, Rational obj) {
    lower.push_back(std::move(lo));
    upper.push_back(std::move(up));
    objective.push_back(std::move(obj));
    return num_vars++;
}

void LpModel::add_row(std::vector<std::pair<int, Rational>> coeffs, RowSense sense,
                      Rational rhs) {
    Row r;
    r.coeffs = std::move(coeffs);
    r.sense = sense;
    r.rhs = std::move(rhs);
    rows.push_back(std::move(r));
}

void LpModel::validate() const {
    if (num_vars < 0)
        throw std::invalid_argument("LpModel: negative variable count");
    if (static_cast<int>(objective.size()) != num_vars ||
        static_cast<int>(lower.size()) != num_vars ||
        static_cast<int>(upper.size()) != num_vars)
        throw std::invalid_argument("LpModel: objective/bound arrays must have num_vars entries");
    for (const auto& row : rows)
        for (const auto& [j, a] : row.coeffs) {
            (void)a;
            if (j < 0 || j >= num_vars)
                throw std::invalid_argument("LpModel: column index out of range");
        }
}

std::string LpModel::to_lp_text() const {
    auto coef = [](const Rational& r) { return r.to_fraction_string(); };
    std::ostringstream os;
    os << "Minimize\n obj:";
    bool first = true;
    for (int j = 0; j < num_vars; ++j) {
        if (objective[j].is_zero()) continue;
        os << (first ? " " : " + ") << coef(objective[j]) << " x" << j;
        first = false;
    }
    if (first) os << " 0 x0";
    os << "\nSubject To\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        os << " r" << i << ":";
        bool f = true;
        for (const auto& [j, a] : rows[i].coeffs) {
            os << (f ? " " : " + ") << coef(a) << " x" << j;
            f = false;
        }
        if (f) os << " 0 x0";
        switch (rows[i].sense) {
            case RowSense::LessEqual: os << " <= "; break;
            case RowSense::GreaterEqual: os << " >= "; break;
            case RowSense::Equal: os << " = "; break;
        }
        os << coef(rows[i].rhs) << "\n";
    }
    os << "Bounds\n";
    for (int j = 0; j < num_vars; ++j) {
        os << " " << coef(lower[j]) << " <= x" << j;
        if (upper[j]) os << " <= " << coef(*upper[j]);
        os << "\n";
    }
    os << "End\n";
    return os.str();
}

}  // namespace ddchrom
