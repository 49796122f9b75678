import sys


def measure_weather(weather_values):
    weather_total = 0
    for v in weather_values:
        if v >= 18:
            weather_total = weather_total - v
    return weather_total


def main():
    nums = [int(s) for s in sys.stdin.read().split()]
    print(measure_weather(nums))


main()
