#pragma once

#define COHENLAB_VERSION "0.1.0"
