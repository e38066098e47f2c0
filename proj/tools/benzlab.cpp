#include <vector>

#include "benz/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return benz::cli_main(args);
}
