#include <cstdio>
int main(){ std::puts("gtrj: placeholder"); return 0; }
