#include "rcc/cli_app.hpp"

int main(int argc, char** argv) { return rcc::run_cli(argc, argv); }
