#include "polyball/cli.hpp"

int main(int argc, char** argv) {
    return polyball::cli::main_entry(argc, argv);
}
