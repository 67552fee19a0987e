import os
import subprocess
import sys

NAME = "odl"


def find_python():
    for candidate in (os.path.join("venv", "Scripts", "python.exe"), os.path.join("venv", "bin", "python")):
        if os.path.exists(candidate):
            return candidate
    return sys.executable


def run_tests(python):
    print("运行测试...")
    result = subprocess.run([python, "-m", "unittest", "discover", "-s", "tests", "-q"], check=False)
    return result.returncode == 0


def build(skip_tests=False):
    print("开始打包轨道退化轨迹计算工具...")

    python = find_python()
    print(f"使用Python: {python}")

    if not skip_tests and not run_tests(python):
        print("\n测试失败, 停止打包!")
        sys.exit(1)

    print("检查并安装依赖与PyInstaller...")
    subprocess.run([python, "-m", "pip", "install", "-r", "requirements.txt", "pyinstaller"], check=True)

    print("开始打包...")
    cmd = [
        python, "-m", "PyInstaller",
        f"--name={NAME}",
        "--console",
        "--onefile",
        "--clean",
        "--noconfirm",
        "--collect-submodules=sympy",
        "--paths=.",
        "src/main.py"
    ]

    if subprocess.run(cmd, check=False).returncode != 0:
        print("\n打包失败!")
        sys.exit(1)

    executable = NAME + (".exe" if os.name == "nt" else "")
    print("\n打包成功!")
    print(f"可执行文件位于: {os.path.join('dist', executable)}")


if __name__ == "__main__":
    build(skip_tests="--skip-tests" in sys.argv[1:])
