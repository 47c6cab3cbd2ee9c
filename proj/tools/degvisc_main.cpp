#include "degvisc/cli.hpp"

int main(int argc, char** argv) { return degvisc::cli_main(argc, argv); }
