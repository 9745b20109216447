#include "squeezeforce/cli.hpp"

int main(int argc, char** argv) {
    return squeezeforce::run_cli(argc, argv);
}
