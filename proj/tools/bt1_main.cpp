#include <iostream>

#include "bt1/cli.hpp"

int main(int argc, char** argv) {
    return bt1::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
