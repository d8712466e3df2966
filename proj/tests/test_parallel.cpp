#include "distinguo/catalog.hpp"
#include "distinguo/dist.hpp"
#include "distinguo/parallel.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace distinguo;

TEST_CASE("parallel map agrees with the serial reference")
{
    auto graphs = all_graphs(6);
    auto d = [](const Graph &g) { return compute_D(g).value; };
    auto serial = serial_map(std::span<const Graph>(graphs), d);
    for (int jobs : {0, 1, 2, 4})
        CHECK(map_items(std::span<const Graph>(graphs), d, jobs) == serial);
    CHECK(parallel_map(std::span<const Graph>(graphs), d, 3) == serial);
}

TEST_CASE("parallel map rethrows the first failure by index")
{
    std::vector<int> xs{0, 1, 2, 3, 4, 5};
    auto fn = [](int x) -> int {
        if (x >= 2)
            throw std::runtime_error("item " + std::to_string(x));
        return x;
    };
    try {
        parallel_map(std::span<const int>(xs), fn, 4);
        FAIL("expected an exception");
    }
    catch (const std::runtime_error &e) {
        CHECK(std::string(e.what()) == "item 2");
    }
}
