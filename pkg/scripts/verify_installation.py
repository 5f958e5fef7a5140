#!/usr/bin/env python3
"""
Installation verification script
Checks that dependencies import, settings load and the smoke checks pass
"""

import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config import settings
from utils.logging import get_logger


logger = get_logger(__name__)


class Colors:
    """ANSI color codes"""
    GREEN = '\033[92m'
    RED = '\033[91m'
    YELLOW = '\033[93m'
    BLUE = '\033[94m'
    BOLD = '\033[1m'
    END = '\033[0m'


def print_header(text: str):
    """Print section header"""
    print(f"\n{Colors.BOLD}{Colors.BLUE}{'='*70}{Colors.END}")
    print(f"{Colors.BOLD}{Colors.BLUE}{text.center(70)}{Colors.END}")
    print(f"{Colors.BOLD}{Colors.BLUE}{'='*70}{Colors.END}\n")


def print_success(text: str):
    print(f"{Colors.GREEN}✓ {text}{Colors.END}")


def print_error(text: str):
    print(f"{Colors.RED}✗ {text}{Colors.END}")


def print_warning(text: str):
    print(f"{Colors.YELLOW}⚠ {text}{Colors.END}")


def print_info(text: str):
    print(f"  {text}")


def check_dependencies():
    """Check if all required packages are installed"""
    print_header("DEPENDENCIES CHECK")

    required_packages = [
        "numpy",
        "scipy",
        "sympy",
        "pydantic",
        "pydantic_settings",
        "dotenv",
        "pytest",
    ]

    missing = []

    for package in required_packages:
        try:
            __import__(package)
            print_success(f"{package}")
        except ImportError:
            print_error(f"{package} - NOT INSTALLED")
            missing.append(package)

    if missing:
        print_warning(f"\nMissing packages: {', '.join(missing)}")
        print_info("Install with: pip install -r requirements.txt")
        return [f"Missing packages: {', '.join(missing)}"]

    return []


def check_configuration():
    """Check configuration settings"""
    print_header("CONFIGURATION CHECK")

    issues = []

    print_success(f"Dense cap: {settings.dense_cap}")
    print_info(f"Tolerance: {settings.tolerance}")
    print_info(f"Pseudo-inverse rtol: {settings.pinv_rtol}")
    print_info(f"Workers: {settings.workers}")

    if settings.dense_cap > 1 << 14:
        print_warning("Dense cap above 16384; dense matrices may not fit in memory")
    if settings.workers < 1:
        print_error("COMMUTANT_WORKERS must be at least 1")
        issues.append("Set COMMUTANT_WORKERS >= 1 in .env")

    return issues


def check_smoke():
    """Run the fast acceptance tiers"""
    print_header("ACCEPTANCE CHECK")

    from acceptance import TIERS, VERIFY

    issues = []
    for tier in TIERS:
        try:
            checks = VERIFY[tier]()
        except Exception as e:
            print_error(f"{tier}: {e}")
            issues.append(f"{tier} tier raised {type(e).__name__}")
            continue
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            print_error(f"{tier}: {', '.join(failed)} failed")
            issues.append(f"{tier} tier: {', '.join(failed)}")
        else:
            print_success(f"{tier}: {len(checks)} checks")

    return issues


def main():
    """Run all verification checks"""
    print(f"\n{Colors.BOLD}CLIFFORD COMMUTANT TOOLKIT{Colors.END}")
    print(f"{Colors.BOLD}Installation Verification{Colors.END}")

    all_issues = []

    all_issues.extend(check_dependencies())
    if all_issues:
        # nothing below imports without the dependencies
        print_error("Fix the missing packages first")
        return 1
    all_issues.extend(check_configuration())
    all_issues.extend(check_smoke())

    # Summary
    print_header("VERIFICATION SUMMARY")

    if not all_issues:
        print_success("All checks passed! Toolkit is ready to use.")
        print_info("\nNext steps:")
        print_info("1. Run tests: pytest tests/ -v")
        print_info("2. Slow tier: COMMUTANT_SLOW_TESTS=1 pytest tests/ -m slow")
        print_info("3. Try: python main.py dim -n 3 -k 4")
        return 0
    else:
        print_error(f"Found {len(all_issues)} issue(s):\n")
        for i, issue in enumerate(all_issues, 1):
            print(f"  {i}. {issue}")
        return 1


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\n\nVerification cancelled by user")
        sys.exit(1)
    except Exception as e:
        print(f"\n{Colors.RED}Verification failed: {e}{Colors.END}")
        sys.exit(1)
