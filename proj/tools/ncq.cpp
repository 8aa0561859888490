#include "ncq/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    try {
        auto cfg = ncq::cli::parse_args(argc, argv, std::cout);
        if (!cfg) return 0;
        return ncq::cli::run(*cfg, std::cout, std::cerr);
    } catch (const ncq::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
