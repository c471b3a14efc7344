// Derivation script for the octahedron so(4) fixture: solves the sign
// assignment over the two-commuting-su(2) ansatz and prints the vertex
// matrices as exact p/q grids.  The checked-in fixture under
// tests/fixtures/ is this program's output.

#include "qrsym/composite.hpp"

#include "json.hpp"

#include <iostream>

int main() {
    qrsym::MatrixRep model = qrsym::octahedron_so4_model();
    nlohmann::json out;
    out["target_dim"] = model.target_dim;
    const char* names[6] = {"A", "B", "C", "D", "E", "F"};
    nlohmann::json vertices = nlohmann::json::object();
    for (int v = 0; v < 6; ++v) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < model.target_dim; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < model.target_dim; ++j)
                row.push_back(model.images[size_t(v)].at(i, j).str());
            rows.push_back(row);
        }
        vertices[names[v]] = rows;
    }
    out["vertices"] = vertices;
    std::cout << out.dump(2) << "\n";
    return 0;
}
