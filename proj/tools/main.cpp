#include "openchi/cli.hpp"

int main(int argc, char** argv) { return openchi::run_cli(argc, argv); }
