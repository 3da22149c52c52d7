namespace latk {}
