#include <iostream>
int main(){std::cout<<"hpd placeholder\n";}
