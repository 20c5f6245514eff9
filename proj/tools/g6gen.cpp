// Writes one graph6 line per isomorphism class of the requested order.
// Orders above the built-in enumeration are reached by adding one vertex at a
// time to the order-7 classes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sigroots/enumerate.hpp"
#include "sigroots/graph6.hpp"

using namespace sigroots;

int main(int argc, char** argv) {
    CLI::App app{"graph6 corpus generator"};
    int order = 8;
    bool connected = false;
    std::string out;
    app.add_option("order", order, "number of vertices")->required()->check(CLI::Range(1, 10));
    app.add_flag("--connected-only", connected, "connected graphs only");
    app.add_option("--out", out, "output file (default stdout)");
    CLI11_PARSE(app, argc, argv);

    std::vector<Graph> classes = enumerate_graphs(std::min(order, max_builtin_order), connected);
    for (int m = max_builtin_order; m < order; ++m) {
        classes = extend_by_vertex(classes, connected);
        std::cerr << "order " << m + 1 << ": " << classes.size() << " graphs\n";
    }

    std::ofstream file;
    if (!out.empty()) {
        file.open(out, std::ios::binary | std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot write " << out << '\n';
            return 2;
        }
    }
    std::ostream& sink = out.empty() ? std::cout : file;
    for (const Graph& g : classes) sink << emit_graph6(g) << '\n';
    return sink ? 0 : 2;
}
