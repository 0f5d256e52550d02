# uclab package initialization
