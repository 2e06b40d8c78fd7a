#pragma once

#define GSTIRLING_VERSION "0.1.0"
