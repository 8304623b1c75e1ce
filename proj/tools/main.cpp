#include "ribet/cli.hpp"

int main(int argc, char** argv) {
    return ribet::cli_run(std::vector<std::string>(argv, argv + argc));
}
