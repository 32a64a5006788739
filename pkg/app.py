#!/usr/bin/env python
"""
Sadic - Multidimensional S-adic Substitution Toolkit
Main Application Entry Point
"""
from sadic.controllers import main


if __name__ == '__main__':
    main()
