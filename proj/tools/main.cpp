#include <iostream>

#include "zeck/cli.hpp"

int main(int argc, char** argv) {
    auto parsed = zeck::cli::parse_args(argc, argv, std::cout, std::cerr);
    if (const int* code = std::get_if<int>(&parsed)) return *code;
    return zeck::cli::run(std::get<zeck::cli::RunConfig>(parsed), std::cout, std::cerr);
}
