#include <iostream>
#include <string>
#include <vector>

#include "sho/cli.hpp"

int main(int argc, char** argv) {
    return sho::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
