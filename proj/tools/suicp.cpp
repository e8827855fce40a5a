#include <iostream>

#include "suicp/cli.hpp"

int main(int argc, char** argv) {
    return suicp::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
