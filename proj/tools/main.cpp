#include "hans/cli.hpp"

int main(int argc, char** argv) {
    return hans::cli_main(argc, argv);
}
