// Emits a star-shaped graph file (center self-intersection -2, a chosen
// number of leaves with equal self-intersection) to stdout. The family is
// parameterized by the genus bound g, giving g+3 leaves; the leaf weight
// defaults to -(g+3).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "resgraph/graph.hpp"
#include "resgraph/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"star graph generator"};
    app.name("gen-star");
    long long genus = 0;
    app.add_option("--genus", genus, "genus parameter (gives genus+3 leaves)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    long long d = -1;
    app.add_option("--d", d, "leaf weight magnitude (default genus+3)")
        ->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);
    if (d < 0) d = genus + 3;

    const auto g = resgraph::make_star_graph(static_cast<std::size_t>(genus) + 3, -2, -d);
    std::cout << "# star: center -2 with " << genus + 3 << " leaves of weight " << -d << "\n";
    std::cout << resgraph::serialize_graph(g);
    return 0;
}
