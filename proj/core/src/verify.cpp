#include "tkmoves/diagram.hpp"
