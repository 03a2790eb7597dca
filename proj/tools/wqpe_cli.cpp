#include "wqpe/cli_ops.hpp"

int main(int argc, char** argv) { return wqpe::cli_main(argc, argv); }
