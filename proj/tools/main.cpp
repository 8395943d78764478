#include "simdim/cli.hpp"

int main(int argc, char** argv) { return simdim::cli_main(argc, argv); }
