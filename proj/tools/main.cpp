#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return unicell::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
